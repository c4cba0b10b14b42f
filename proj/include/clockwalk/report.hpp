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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "clockwalk/circuit.hpp"
#include "clockwalk/clock_operator.hpp"
#include "clockwalk/orbit.hpp"
#include "clockwalk/schema.hpp"

namespace clockwalk {

enum class SchemaMode { Raw, Toggle, Counter };

struct SchemaChoice {
    SchemaMode mode = SchemaMode::Toggle;
    unsigned counter_bits = 1;
};

/// "raw", "toggle" or "counter:c" with 1 <= c <= 16.
SchemaChoice parse_schema_choice(std::string_view text);
std::string to_string(const SchemaChoice& choice);

enum class OutputFormat { Json, Csv };

struct RunConfig {
    std::string circuit_path;
    std::string input_bits;  ///< one char per input wire; empty means all zero
    SchemaChoice schema;
    bool oracle = false;
    std::uint64_t max_dimension = default_max_dimension();
    std::string out_path;  ///< empty: primary output goes to the caller's stream
    OutputFormat format = OutputFormat::Json;
    std::vector<double> horizons{50, 100, 200, 400, 800};
};

/// Everything up to and including orbit enumeration.
struct Pipeline {
    ReversibleCircuit source;
    std::optional<Schema> schema;
    ReversibleCircuit composite;
    ClockOperator op;
    Word work = 0;
    Orbit orbit;

    std::optional<Wire> output_wire() const;
};

ReversibleCircuit build_composite(const ReversibleCircuit& source, const SchemaChoice& choice,
                                  std::optional<Schema>* schema_out = nullptr);
Pipeline prepare(const RunConfig& config);

/// Full pipeline; structure verification is skipped (and says so) when the
/// full space exceeds the cap, the oracle section throws CapExceeded instead.
nlohmann::ordered_json run_report(const RunConfig& config);

/// Analysis only: no structure check and no oracle.
nlohmann::ordered_json run_analysis(const Pipeline& pipeline, const RunConfig& config);

nlohmann::ordered_json structure_json(const StructureReport& report);

/// Rounds every floating-point value to 12 significant digits.
nlohmann::ordered_json round_floats(const nlohmann::ordered_json& doc);
std::string dump_report(const nlohmann::ordered_json& doc);

/// "j,P" rows of the report's occupation array.
void write_occupation_csv(std::ostream& out, const nlohmann::ordered_json& report);
/// "T,deviation" rows of the report's oracle convergence section.
void write_convergence_csv(std::ostream& out, const nlohmann::ordered_json& report);

/// Writes the report per config.format to config.out_path (or `fallback`
/// when empty). With a JSON out path, sidecar files <stem>.occupation.csv
/// and, when the oracle ran, <stem>.convergence.csv are written next to it.
void emit_report(const nlohmann::ordered_json& report, const RunConfig& config, std::ostream& fallback);

}  // namespace clockwalk
