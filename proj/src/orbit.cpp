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

#include "clockwalk/orbit.hpp"

#include <bit>
#include <ostream>

#include "clockwalk/errors.hpp"

namespace clockwalk {

Orbit::Orbit(std::vector<BasisState> states, std::size_t work_width, std::size_t clock_width)
    : states_(std::move(states)), work_width_(work_width), clock_width_(clock_width) {
    if (states_.empty()) {
        throw ValidationError("an orbit has at least one state");
    }
    index_.reserve(states_.size());
    for (std::size_t j = 0; j < states_.size(); ++j) {
        if (!index_.emplace(states_[j], j).second) {
            throw InvariantViolation("orbit state " + std::to_string(j) + " repeats an earlier state");
        }
    }
}

std::optional<std::size_t> Orbit::index_of(const BasisState& state) const {
    auto it = index_.find(state);
    return it == index_.end() ? std::nullopt : std::optional<std::size_t>(it->second);
}

std::size_t Orbit::clock_position(std::size_t j) const {
    return static_cast<std::size_t>(std::countr_zero(states_[j].clock));
}

std::size_t default_orbit_cap(std::size_t clock_width, const SchemaDescriptor& descriptor) {
    return 2 * clock_width * descriptor.repetitions * (std::size_t{1} << descriptor.counter_bits);
}

Orbit enumerate_orbit(const ClockOperator& op, const BasisState& initial, std::size_t max_length) {
    if (std::popcount(initial.clock) != 1 || (initial.clock & 1u) == 0) {
        throw ValidationError("orbit enumeration needs the clock one-hot at position 0");
    }
    std::vector<BasisState> states{initial};
    std::unordered_map<BasisState, std::size_t, BasisStateHash> seen{{initial, 0}};
    BasisState current = initial;
    while (true) {
        auto next = step(op, current, Direction::Forward);
        if (!next) {
            throw InvariantViolation("F annihilated orbit state " + std::to_string(states.size() - 1));
        }
        if (*next == initial) {
            break;
        }
        if (seen.contains(*next)) {
            throw InvariantViolation("orbit re-entered state " + std::to_string(seen.at(*next)) +
                                     " without passing through the initial state");
        }
        if (states.size() >= max_length) {
            throw CapExceeded("orbit longer than the cap of " + std::to_string(max_length) + " states");
        }
        seen.emplace(*next, states.size());
        states.push_back(*next);
        current = *next;
    }
    return Orbit(std::move(states), op.work_width(), op.clock_width());
}

std::string_view to_string(Classification c) { return c == Classification::Yes ? "yes" : "no"; }

Classification classify_dimension(std::size_t d, std::size_t s, unsigned r, unsigned c) {
    const std::size_t no_dim = s * r;
    const std::size_t yes_dim = no_dim << c;
    if (d == yes_dim) {
        return Classification::Yes;
    }
    if (d == no_dim) {
        return Classification::No;
    }
    throw ValidationError("non-schema orbit: d=" + std::to_string(d) + " is neither s*r=" + std::to_string(no_dim) +
                          " nor 2^c*s*r=" + std::to_string(yes_dim));
}

Classification classify_instance(const Orbit& orbit, const SchemaDescriptor& descriptor) {
    const std::size_t s = orbit.clock_width();
    const Classification c =
        classify_dimension(orbit.dimension(), s, descriptor.repetitions, descriptor.counter_bits);
    const std::size_t readout = (s * descriptor.repetitions) % orbit.dimension();
    const bool bit = orbit.output_bit(readout, descriptor.output_wire());
    if (bit != (c == Classification::Yes)) {
        throw InvariantViolation("orbit dimension says '" + std::string(to_string(c)) +
                                 "' but the output wire after r cycles reads " + (bit ? "1" : "0"));
    }
    return c;
}

void write_orbit_csv(std::ostream& out, const Orbit& orbit, std::optional<Wire> output_wire) {
    out << "j,work_bits,clock_position,output_bit\n";
    for (std::size_t j = 0; j < orbit.dimension(); ++j) {
        out << j << ',' << BitString(orbit[j].work, orbit.work_width()).str() << ',' << orbit.clock_position(j) << ',';
        if (output_wire) {
            out << (orbit.output_bit(j, *output_wire) ? 1 : 0);
        }
        out << '\n';
    }
}

}  // namespace clockwalk
