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

#include <cstddef>
#include <optional>
#include <vector>

#include "clockwalk/circuit.hpp"

namespace clockwalk {

/// Parameters of a schema circuit V with V^r |x, y, 0...0> = |x, y + f(x) mod 2^c, 0...0>.
struct SchemaDescriptor {
    unsigned repetitions = 2;  ///< r, always even
    unsigned counter_bits = 1; ///< c
    std::size_t compute_gate_count = 0;

    std::vector<Wire> input_wires;
    std::vector<Wire> output_wires;  ///< counter bits, least significant first
    Wire predicate_wire = 0;
    Wire toggle_wire = 0;

    Wire output_wire() const { return output_wires.front(); }
};

struct Schema {
    ReversibleCircuit circuit;
    SchemaDescriptor descriptor;
};

/// Default width cap for the exhaustive contract check; beyond it a fixed
/// pseudo-random sample of inputs is checked instead.
inline constexpr std::size_t kContractCheckWidth = 12;

/// Wraps a predicate circuit G (x, w=0) -> (x, w=f(x)) into
///
///     V = [G; x t; ccx w t y; x t; reverse(G); x t]
///
/// on G's wires plus an output wire y and a toggle wire t, so that
/// V^2 (x, y, 0...0) = (x, y xor f(x), 0...0). The predicate wire w is
/// `result_wire` if given, otherwise G's wire with role output, otherwise its
/// only scratch wire.
Schema build_toggle_schema(const ReversibleCircuit& predicate, std::optional<Wire> result_wire = std::nullopt,
                           std::size_t check_width = kContractCheckWidth);

/// As build_toggle_schema but the toggle gate is replaced by a c-bit ripple
/// increment of the output register controlled on (w, t). Uses c-1 extra
/// scratch wires and 3c-2 gates for the increment; c=1 reproduces the toggle
/// schema exactly.
Schema build_counter_schema(const ReversibleCircuit& predicate, unsigned counter_bits,
                            std::optional<Wire> result_wire = std::nullopt,
                            std::size_t check_width = kContractCheckWidth);

/// Predicate value f(x) of the schema's embedded G for an input assignment
/// (input wires in ascending order).
bool schema_predicate(const Schema& schema, Word input_assignment);

/// Places an input assignment and output value on the schema's work register
/// with every other wire zero.
Word schema_register(const SchemaDescriptor& descriptor, Word input_assignment, Word output_value);

/// Checks V^r(x, y, 0...0) = (x, y + f(x) mod 2^c, 0...0) for all x, y when
/// the input+output width is at most `check_width`, otherwise on a fixed
/// sample. Throws ValidationError on the first violation.
void check_schema_contract(const Schema& schema, std::size_t check_width = kContractCheckWidth);

}  // namespace clockwalk
