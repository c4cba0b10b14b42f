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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "clockwalk/clock_operator.hpp"
#include "clockwalk/errors.hpp"
#include "clockwalk/orbit.hpp"
#include "clockwalk/report.hpp"

namespace cw = clockwalk;

namespace {

struct Options {
    std::string circuit;
    std::string input;
    std::string schema = "toggle";
    bool oracle = false;
    std::uint64_t max_dim = 0;
    std::string out;
    std::string format = "json";
};

void add_common(CLI::App* sub, Options& o, bool with_schema = true) {
    sub->add_option("--circuit", o.circuit, "circuit file")->required();
    if (with_schema) {
        sub->add_option("--schema", o.schema, "raw, toggle or counter:c")->capture_default_str();
        sub->add_option("--input", o.input, "input bits, one per input wire");
    }
    sub->add_option("--max-dim", o.max_dim, "cap on explicit full-space dimension (default: CLOCKWALK_MAX_DIM or 16384)");
    sub->add_option("--out", o.out, "output path (default: stdout)");
}

cw::RunConfig to_config(const Options& o) {
    cw::RunConfig c;
    c.circuit_path = o.circuit;
    c.input_bits = o.input;
    c.schema = cw::parse_schema_choice(o.schema);
    c.oracle = o.oracle;
    c.max_dimension = o.max_dim ? o.max_dim : cw::default_max_dimension();
    c.out_path = o.out;
    if (o.format == "json") {
        c.format = cw::OutputFormat::Json;
    } else if (o.format == "csv") {
        c.format = cw::OutputFormat::Csv;
    } else {
        throw cw::ValidationError("unknown format '" + o.format + "' (expected json or csv)");
    }
    return c;
}

template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw cw::ValidationError("cannot write '" + path + "'");
    }
    fn(f);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clockwalk: clock Hamiltonians of reversible circuits"};
    app.require_subcommand(1);
    Options o;

    auto* validate = app.add_subcommand("validate", "parse a circuit and check the schema contract");
    add_common(validate, o);
    auto* build = app.add_subcommand("build", "print the composite circuit the clock runs");
    add_common(build, o);
    auto* orbit = app.add_subcommand("orbit", "dump the orbit of the initial state");
    add_common(orbit, o);
    auto* analyze = app.add_subcommand("analyze", "orbit analysis without structure check or oracle");
    add_common(analyze, o);
    analyze->add_option("--format", o.format, "json or csv");
    auto* verify = app.add_subcommand("verify", "exhaustive structure check of A");
    add_common(verify, o);
    auto* report = app.add_subcommand("report", "full pipeline");
    add_common(report, o);
    report->add_flag("--oracle", o.oracle, "cross-check against full-space diagonalization");
    report->add_option("--format", o.format, "json or csv");
    auto* graph = app.add_subcommand("export-graph", "edge list of A");
    add_common(graph, o);

    CLI11_PARSE(app, argc, argv);

    try {
        const cw::RunConfig config = to_config(o);
        if (validate->parsed()) {
            const auto source = cw::load_circuit(config.circuit_path);
            const auto composite = cw::build_composite(source, config.schema);
            std::cout << "ok: " << source.width() << " wires, " << source.size() << " gates; composite "
                      << composite.width() << " wires, " << composite.size() << " gates\n";
        } else if (build->parsed()) {
            const auto composite = cw::build_composite(cw::load_circuit(config.circuit_path), config.schema);
            with_output(config.out_path, [&](std::ostream& os) { os << cw::format_circuit(composite); });
        } else if (orbit->parsed()) {
            const auto pl = cw::prepare(config);
            with_output(config.out_path, [&](std::ostream& os) { cw::write_orbit_csv(os, pl.orbit, pl.output_wire()); });
        } else if (analyze->parsed()) {
            const auto pl = cw::prepare(config);
            cw::emit_report(cw::run_analysis(pl, config), config, std::cout);
        } else if (verify->parsed()) {
            const auto composite = cw::build_composite(cw::load_circuit(config.circuit_path), config.schema);
            const auto op = cw::build_forward_operator(composite);
            const auto r = cw::verify_structure(op, config.max_dimension);
            const auto doc = cw::structure_json(r);
            with_output(config.out_path, [&](std::ostream& os) { os << cw::dump_report(doc); });
            const bool ok = r.is_symmetric && r.entries_01 && r.zero_diagonal && r.max_term_support <= 5;
            if (!ok) {
                std::cerr << "error: A is not a symmetric 0/1 zero-diagonal 5-local matrix\n";
                return 2;
            }
        } else if (report->parsed()) {
            cw::emit_report(cw::run_report(config), config, std::cout);
        } else if (graph->parsed()) {
            const auto composite = cw::build_composite(cw::load_circuit(config.circuit_path), config.schema);
            const auto op = cw::build_forward_operator(composite);
            with_output(config.out_path, [&](std::ostream& os) { cw::write_edge_list(os, op, config.max_dimension); });
        }
    } catch (const cw::CapExceeded& e) {
        std::cerr << "error: cap exceeded: " << e.what() << '\n';
        return 1;
    } catch (const cw::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const cw::InvariantViolation& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
