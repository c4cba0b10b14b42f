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
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "clockwalk/circuit.hpp"

namespace clockwalk {

/// Computational basis state of work register plus clock register. Bit i of
/// `clock` is clock wire i; dynamical states have exactly one clock bit set.
struct BasisState {
    Word work = 0;
    Word clock = 0;

    bool operator==(const BasisState&) const = default;
};

struct BasisStateHash {
    std::size_t operator()(const BasisState& s) const noexcept {
        return std::hash<Word>{}(s.work * 0x9e3779b97f4a7c15ull ^ s.clock);
    }
};

/// One summand of the forward-time operator: `gate` on the work wires times
/// the clock hop a^dagger_to a_from.
struct ClockTerm {
    Gate gate;
    std::size_t from = 0;
    std::size_t to = 0;
};

enum class Direction { Forward, Backward };

/// Implicit representation of F = sum_k T_k (x) a^dagger_{k+1 mod s} a_k and
/// of A = F + F^dagger.
class ClockOperator {
   public:
    /// Arbitrary term lists are accepted so that malformed operators can be
    /// exercised; use build_forward_operator for the real construction.
    ClockOperator(std::size_t work_width, std::size_t clock_width, std::vector<ClockTerm> terms);

    std::size_t work_width() const { return work_width_; }
    std::size_t clock_width() const { return clock_width_; }
    std::size_t total_wires() const { return work_width_ + clock_width_; }
    const std::vector<ClockTerm>& terms() const { return terms_; }

    /// Number of wires term k acts on non-trivially.
    std::size_t term_support(std::size_t k) const;

    /// 2^(m+s); throws CapExceeded if that does not fit in 63 bits.
    std::uint64_t full_dimension() const;

    /// Packs a state as a decimal-able index: composite wire p (work wires
    /// first, then clock wires) is bit (m+s-1-p), so work bits are most
    /// significant and wire 0 is the leading bit.
    std::uint64_t encode(const BasisState& state) const;
    BasisState decode(std::uint64_t index) const;

    /// Work register `work` with the clock one-hot at position 0.
    BasisState initial_state(Word work) const { return BasisState{work, Word{1}}; }

    /// Calls fn(image) for every basis state reached from `state` by a single
    /// term of F (Forward) or F^dagger (Backward). Each call is one unit of
    /// matrix weight.
    template <typename Fn>
    void for_each_image(const BasisState& state, Direction dir, Fn&& fn) const {
        for (const ClockTerm& t : terms_) {
            const Word src = Word{1} << (dir == Direction::Forward ? t.from : t.to);
            const Word dst = Word{1} << (dir == Direction::Forward ? t.to : t.from);
            if ((state.clock & src) && !(state.clock & dst)) {
                fn(BasisState{t.gate.apply(state.work), (state.clock ^ src) | dst});
            }
        }
    }

   private:
    std::size_t work_width_;
    std::size_t clock_width_;
    std::vector<ClockTerm> terms_;
};

/// Term k applies gate k of the circuit and hops the clock k -> k+1 mod s.
/// Requires at least two gates.
ClockOperator build_forward_operator(const ReversibleCircuit& circuit);

/// Single application of F or F^dagger. Returns nullopt when the operator
/// annihilates the state; throws InvariantViolation when the image is a
/// superposition of several basis states (possible only off the one-hot
/// clock subspace).
std::optional<BasisState> step(const ClockOperator& op, const BasisState& state, Direction dir);

/// Square matrix with small non-negative integer entries in CSR layout.
struct SparseIntMatrix {
    std::uint64_t dimension = 0;
    std::vector<std::uint64_t> row_offsets;  ///< size dimension+1
    std::vector<std::uint64_t> columns;      ///< sorted within a row
    std::vector<std::uint32_t> values;

    std::uint32_t at(std::uint64_t row, std::uint64_t col) const;
    std::uint64_t nonzeros() const { return columns.size(); }
};

enum class OperatorPart { F, A };

/// Default cap on explicit full-space work: 2^14 rows, overridden by the
/// CLOCKWALK_MAX_DIM environment variable.
std::uint64_t default_max_dimension();

/// Throws CapExceeded if 2^(m+s) > max_dimension.
std::uint64_t checked_dimension(const ClockOperator& op, std::uint64_t max_dimension);

/// Explicit matrix of F or A = F + F^T on the full 2^(m+s) space. Entry
/// (row, col) is the weight of |row><col|.
SparseIntMatrix assemble_matrix(const ClockOperator& op, OperatorPart which, std::uint64_t max_dimension);

struct StructureReport {
    bool is_symmetric = true;
    bool entries_01 = true;
    bool zero_diagonal = true;
    std::size_t max_term_support = 0;
    std::uint64_t full_dimension = 0;
    std::uint32_t max_entry = 0;
    std::uint64_t edges = 0;  ///< unordered pairs {u, v} with A_uv != 0

    bool adjacency_matrix() const { return is_symmetric && entries_01 && zero_diagonal; }
};

/// Exhaustive check over every computational basis state, including invalid
/// clock patterns, that A is a symmetric 0/1 matrix with zero diagonal.
StructureReport verify_structure(const ClockOperator& op, std::uint64_t max_dimension);

/// One "u v" line per undirected edge of A, u < v, ascending.
void write_edge_list(std::ostream& out, const ClockOperator& op, std::uint64_t max_dimension);

}  // namespace clockwalk
