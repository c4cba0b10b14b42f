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

#include "clockwalk/clock_operator.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <ostream>

#include "clockwalk/errors.hpp"
#include "clockwalk/kernels.hpp"

namespace clockwalk {

ClockOperator::ClockOperator(std::size_t work_width, std::size_t clock_width, std::vector<ClockTerm> terms)
    : work_width_(work_width), clock_width_(clock_width), terms_(std::move(terms)) {
    if (work_width == 0 || work_width > kMaxWidth) {
        throw ValidationError("work register width must be in [1, 64]");
    }
    if (clock_width == 0 || clock_width > kMaxWidth) {
        throw ValidationError("clock register width must be in [1, 64], got " + std::to_string(clock_width));
    }
    for (const ClockTerm& t : terms_) {
        if (t.from >= clock_width || t.to >= clock_width) {
            throw ValidationError("clock term refers to a clock wire out of range");
        }
        for (Wire w : t.gate.support()) {
            if (w >= work_width) {
                throw ValidationError("clock term gate refers to a work wire out of range");
            }
        }
    }
}

std::size_t ClockOperator::term_support(std::size_t k) const {
    const ClockTerm& t = terms_.at(k);
    return t.gate.arity() + (t.from == t.to ? 1 : 2);
}

std::uint64_t ClockOperator::full_dimension() const {
    if (total_wires() > 62) {
        throw CapExceeded("full space of " + std::to_string(total_wires()) + " wires is not addressable");
    }
    return std::uint64_t{1} << total_wires();
}

std::uint64_t ClockOperator::encode(const BasisState& state) const {
    const std::size_t n = total_wires();
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < work_width_; ++i) {
        index |= ((state.work >> i) & 1u) << (n - 1 - i);
    }
    for (std::size_t k = 0; k < clock_width_; ++k) {
        index |= ((state.clock >> k) & 1u) << (clock_width_ - 1 - k);
    }
    return index;
}

BasisState ClockOperator::decode(std::uint64_t index) const {
    const std::size_t n = total_wires();
    BasisState s;
    for (std::size_t i = 0; i < work_width_; ++i) {
        s.work |= ((index >> (n - 1 - i)) & 1u) << i;
    }
    for (std::size_t k = 0; k < clock_width_; ++k) {
        s.clock |= ((index >> (clock_width_ - 1 - k)) & 1u) << k;
    }
    return s;
}

ClockOperator build_forward_operator(const ReversibleCircuit& circuit) {
    const std::size_t s = circuit.size();
    if (s < 2) {
        throw ValidationError("the clock construction needs at least 2 gates, circuit has " + std::to_string(s));
    }
    if (s > kMaxWidth) {
        throw ValidationError("circuit has " + std::to_string(s) + " gates; the clock register is limited to " +
                              std::to_string(kMaxWidth));
    }
    std::vector<ClockTerm> terms;
    terms.reserve(s);
    for (std::size_t k = 0; k < s; ++k) {
        terms.push_back(ClockTerm{circuit[k], k, (k + 1) % s});
    }
    return ClockOperator(circuit.width(), s, std::move(terms));
}

std::optional<BasisState> step(const ClockOperator& op, const BasisState& state, Direction dir) {
    std::optional<BasisState> out;
    std::size_t count = 0;
    op.for_each_image(state, dir, [&](const BasisState& img) {
        ++count;
        out = img;
    });
    if (count > 1) {
        throw InvariantViolation("state maps to a superposition of " + std::to_string(count) +
                                 " basis states; step is defined only for single images");
    }
    return out;
}

std::uint32_t SparseIntMatrix::at(std::uint64_t row, std::uint64_t col) const {
    auto begin = columns.begin() + static_cast<std::ptrdiff_t>(row_offsets[row]);
    auto end = columns.begin() + static_cast<std::ptrdiff_t>(row_offsets[row + 1]);
    auto it = std::lower_bound(begin, end, col);
    return (it != end && *it == col) ? values[static_cast<std::size_t>(it - columns.begin())] : 0;
}

std::uint64_t default_max_dimension() {
    constexpr std::uint64_t kDefault = std::uint64_t{1} << 14;
    const char* env = std::getenv("CLOCKWALK_MAX_DIM");
    if (env == nullptr || *env == '\0') {
        return kDefault;
    }
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec != std::errc{} || *ptr != '\0' || value == 0) {
        throw ValidationError(std::string("CLOCKWALK_MAX_DIM must be a positive integer, got '") + env + "'");
    }
    return value;
}

std::uint64_t checked_dimension(const ClockOperator& op, std::uint64_t max_dimension) {
    if (op.total_wires() > 62 || op.full_dimension() > max_dimension) {
        throw CapExceeded("full space 2^" + std::to_string(op.total_wires()) + " exceeds the dimension cap " +
                          std::to_string(max_dimension));
    }
    return op.full_dimension();
}

SparseIntMatrix assemble_matrix(const ClockOperator& op, OperatorPart which, std::uint64_t max_dimension) {
    const std::uint64_t dim = checked_dimension(op, max_dimension);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;  // (row, col)
    for (std::uint64_t col = 0; col < dim; ++col) {
        const BasisState s = op.decode(col);
        op.for_each_image(s, Direction::Forward, [&](const BasisState& img) { entries.emplace_back(op.encode(img), col); });
        if (which == OperatorPart::A) {
            op.for_each_image(s, Direction::Backward,
                              [&](const BasisState& img) { entries.emplace_back(op.encode(img), col); });
        }
    }
    std::sort(entries.begin(), entries.end());

    SparseIntMatrix m;
    m.dimension = dim;
    m.row_offsets.assign(dim + 1, 0);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0 && entries[i] == entries[i - 1]) {
            ++m.values.back();
            continue;
        }
        m.columns.push_back(entries[i].second);
        m.values.push_back(1);
        ++m.row_offsets[entries[i].first + 1];
    }
    for (std::uint64_t r = 0; r < dim; ++r) {
        m.row_offsets[r + 1] += m.row_offsets[r];
    }
    return m;
}

StructureReport verify_structure(const ClockOperator& op, std::uint64_t max_dimension) {
    StructureReport report;
    report.full_dimension = checked_dimension(op, max_dimension);
    for (std::size_t k = 0; k < op.terms().size(); ++k) {
        report.max_term_support = std::max(report.max_term_support, op.term_support(k));
    }
    const auto tally = kernels::structure_scan(op, 0, report.full_dimension);
    report.is_symmetric = tally.symmetric;
    report.entries_01 = tally.entries_01;
    report.zero_diagonal = tally.zero_diagonal;
    report.max_entry = tally.max_entry;
    report.edges = tally.edges;
    return report;
}

void write_edge_list(std::ostream& out, const ClockOperator& op, std::uint64_t max_dimension) {
    const SparseIntMatrix a = assemble_matrix(op, OperatorPart::A, max_dimension);
    for (std::uint64_t u = 0; u < a.dimension; ++u) {
        for (std::uint64_t e = a.row_offsets[u]; e < a.row_offsets[u + 1]; ++e) {
            if (a.columns[e] > u) {
                out << u << ' ' << a.columns[e] << '\n';
            }
        }
    }
}

}  // namespace clockwalk
