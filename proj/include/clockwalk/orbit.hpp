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
#include <iosfwd>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "clockwalk/clock_operator.hpp"
#include "clockwalk/schema.hpp"

namespace clockwalk {

/// The states Psi_0 ... Psi_{d-1} visited by F from a one-hot initial state;
/// F acts on their span as the cyclic shift Psi_j -> Psi_{j+1 mod d}.
class Orbit {
   public:
    Orbit(std::vector<BasisState> states, std::size_t work_width, std::size_t clock_width);

    std::size_t dimension() const { return states_.size(); }
    std::size_t work_width() const { return work_width_; }
    std::size_t clock_width() const { return clock_width_; }
    const std::vector<BasisState>& states() const { return states_; }
    const BasisState& operator[](std::size_t j) const { return states_[j]; }
    std::optional<std::size_t> index_of(const BasisState& state) const;

    /// Position of the single clock bit of Psi_j.
    std::size_t clock_position(std::size_t j) const;
    bool output_bit(std::size_t j, Wire wire) const { return (states_[j].work >> wire) & 1u; }

   private:
    std::vector<BasisState> states_;
    std::size_t work_width_;
    std::size_t clock_width_;
    std::unordered_map<BasisState, std::size_t, BasisStateHash> index_;
};

/// Safety cap on orbit length for a schema: 2 * s * r * 2^c.
std::size_t default_orbit_cap(std::size_t clock_width, const SchemaDescriptor& descriptor);

/// Steps F from `initial` (clock one-hot at position 0) until it recurs.
/// Throws CapExceeded after `max_length` states, InvariantViolation if a
/// state other than the initial one repeats or F annihilates a state.
Orbit enumerate_orbit(const ClockOperator& op, const BasisState& initial, std::size_t max_length);

enum class Classification { Yes, No };

std::string_view to_string(Classification c);

/// yes iff d = 2^c s r, no iff d = s r; anything else is a ValidationError
/// (non-schema circuit or premature recurrence).
Classification classify_dimension(std::size_t d, std::size_t s, unsigned r, unsigned c = 1);

/// classify_dimension plus the direct readout check: the output wire of
/// Psi_{s r} must equal the classification.
Classification classify_instance(const Orbit& orbit, const SchemaDescriptor& descriptor);

/// CSV with header "j,work_bits,clock_position,output_bit".
void write_orbit_csv(std::ostream& out, const Orbit& orbit, std::optional<Wire> output_wire);

}  // namespace clockwalk
