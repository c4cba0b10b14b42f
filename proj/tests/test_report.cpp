// Copyright 2026 The clockwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "clockwalk/errors.hpp"
#include "clockwalk/report.hpp"
#include "testing.hpp"

using namespace clockwalk;
using testing_util::data_path;

namespace {

RunConfig config_for(const std::string& name, const std::string& input) {
    RunConfig c;
    c.circuit_path = data_path(name);
    c.input_bits = input;
    return c;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Report, schema_choice) {
    ASSERT_EQ(parse_schema_choice("raw").mode, SchemaMode::Raw);
    ASSERT_EQ(parse_schema_choice("toggle").mode, SchemaMode::Toggle);
    const auto c = parse_schema_choice("counter:3");
    ASSERT_EQ(c.mode, SchemaMode::Counter);
    ASSERT_EQ(c.counter_bits, 3u);
    ASSERT_EQ(to_string(c), "counter:3");
    ASSERT_THROW(parse_schema_choice("counter:0"), ValidationError);
    ASSERT_THROW(parse_schema_choice("counter:x"), ValidationError);
    ASSERT_THROW(parse_schema_choice("bogus"), ValidationError);
}

TEST(Report, and_yes_with_oracle) {
    auto cfg = config_for("and.rev", "11");
    cfg.oracle = true;
    const auto r = run_report(cfg);
    ASSERT_EQ(r.at("classification"), "yes");
    ASSERT_EQ(r.at("d"), 24);
    ASSERT_EQ(r.at("s"), 6);
    ASSERT_EQ(r.at("r"), 2);
    ASSERT_NEAR(r.at("entropy_bits").get<double>(), 3.6683, 1e-4);
    ASSERT_DOUBLE_EQ(r.at("output_occupation_p").get<double>(), 0.5);
    ASSERT_TRUE(r.at("structure").at("entries_01").get<bool>());
    ASSERT_LT(r.at("oracle").at("trace_distance_to_orbit_average").get<double>(), 1e-8);
    ASSERT_NEAR(r.at("oracle").at("entropy_bits").get<double>(), 3.6682958340544896, 1e-8);
    ASSERT_EQ(r.at("oracle").at("convergence").size(), 5u);
    ASSERT_NEAR(r.at("fourier_even").at("even_observed").get<double>(), 2.0 / 24, 1e-12);
    ASSERT_NEAR(r.at("fourier_even").at("even_claimed").get<double>(), 1.0 / 24, 1e-15);
}

TEST(Report, and_no_instance) {
    const auto r = run_report(config_for("and.rev", "00"));
    ASSERT_EQ(r.at("classification"), "no");
    ASSERT_EQ(r.at("d"), 12);
    ASSERT_EQ(r.at("output_occupation_p").get<double>(), 0.0);
    ASSERT_FALSE(r.contains("oracle"));
}

TEST(Report, validation_errors) {
    ASSERT_THROW(run_report(config_for("and.rev", "1")), ValidationError);
    ASSERT_THROW(run_report(config_for("and.rev", "1x")), ValidationError);
    try {
        run_report(config_for("missing.rev", ""));
        FAIL();
    } catch (const ValidationError& e) {
        ASSERT_NE(std::string(e.what()).find("missing.rev"), std::string::npos);
    }
    auto cfg = config_for("and.rev", "11");
    cfg.max_dimension = 0;
    ASSERT_THROW(run_report(cfg), ValidationError);
    cfg.max_dimension = 1024;
    cfg.oracle = true;
    ASSERT_THROW(run_report(cfg), CapExceeded);
}

TEST(Report, structure_skipped_over_cap) {
    auto cfg = config_for("and.rev", "11");
    cfg.max_dimension = 1024;
    const auto r = run_report(cfg);
    ASSERT_TRUE(r.at("structure").contains("skipped"));
    ASSERT_EQ(r.at("d"), 24);
}

TEST(Report, raw_mode) {
    auto cfg = config_for("shift.rev", "");
    cfg.schema = parse_schema_choice("raw");
    const auto r = run_report(cfg);
    ASSERT_EQ(r.at("d"), 4);
    ASSERT_TRUE(r.at("classification").is_null());
    ASSERT_TRUE(r.at("output_occupation_p").is_null());
    ASSERT_NEAR(r.at("entropy_bits").get<double>(), 1.5, 1e-12);
}

TEST(Report, rounding_and_determinism) {
    nlohmann::ordered_json j = {{"a", 0.1 + 0.2}, {"b", {1.0 / 3.0, -0.0}}, {"n", 7}};
    const auto r = round_floats(j);
    ASSERT_EQ(r.dump(), R"({"a":0.3,"b":[0.333333333333,0.0],"n":7})");
    auto cfg = config_for("xor.rev", "10");
    ASSERT_EQ(dump_report(run_report(cfg)), dump_report(run_report(cfg)));
}

TEST(Report, emit_writes_sidecars) {
    const auto dir = std::filesystem::temp_directory_path() / "clockwalk_report_test";
    std::filesystem::create_directories(dir);
    auto cfg = config_for("and.rev", "01");
    cfg.oracle = true;
    cfg.out_path = (dir / "run.json").string();
    const auto r = run_report(cfg);
    std::ostringstream unused;
    emit_report(r, cfg, unused);
    ASSERT_TRUE(unused.str().empty());
    ASSERT_EQ(slurp(dir / "run.json"), dump_report(r));
    const auto occ = slurp(dir / "run.occupation.csv");
    ASSERT_EQ(occ.substr(0, 4), "j,P\n");
    ASSERT_EQ(std::count(occ.begin(), occ.end(), '\n'), 13);
    const auto conv = slurp(dir / "run.convergence.csv");
    ASSERT_EQ(conv.substr(0, 12), "T,deviation\n");
    ASSERT_EQ(std::count(conv.begin(), conv.end(), '\n'), 6);

    cfg.format = OutputFormat::Csv;
    cfg.out_path.clear();
    std::ostringstream os;
    emit_report(r, cfg, os);
    ASSERT_EQ(os.str(), occ);
    std::filesystem::remove_all(dir);
}
