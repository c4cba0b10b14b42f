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

// Data-parallel inner loops. Every kernel has a serial reference version and
// an OpenMP version; both produce bit-identical results because parallelism
// is only over independent outputs and every floating-point sum runs in a
// fixed serial order.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "clockwalk/clock_operator.hpp"

namespace clockwalk::kernels {

enum class Execution { Serial, Parallel };

struct StructureTally {
    bool symmetric = true;
    bool entries_01 = true;
    bool zero_diagonal = true;
    std::uint32_t max_entry = 0;
    std::uint64_t edges = 0;

    void merge(const StructureTally& other);
    bool operator==(const StructureTally&) const = default;
};

/// Pairs (k, l) of orbit Fourier labels with equal eigenvalues, including k == l.
using LabelPairs = std::vector<std::pair<std::size_t, std::size_t>>;

namespace serial {
StructureTally structure_scan(const ClockOperator& op, std::uint64_t begin, std::uint64_t end);
std::vector<double> occupation(std::size_t d, const LabelPairs& pairs);
std::vector<std::complex<double>> character_transform(std::span<const double> p);
void damp_coherences(Eigen::MatrixXcd& rho, std::span<const double> eigenvalues,
                     std::span<const std::size_t> cluster_of, double horizon);
}  // namespace serial

namespace omp {
StructureTally structure_scan(const ClockOperator& op, std::uint64_t begin, std::uint64_t end);
std::vector<double> occupation(std::size_t d, const LabelPairs& pairs);
std::vector<std::complex<double>> character_transform(std::span<const double> p);
void damp_coherences(Eigen::MatrixXcd& rho, std::span<const double> eigenvalues,
                     std::span<const std::size_t> cluster_of, double horizon);
int max_threads();
}  // namespace omp

/// Tally of A's structure over basis indices [begin, end).
StructureTally structure_scan(const ClockOperator& op, std::uint64_t begin, std::uint64_t end,
                              Execution exec = Execution::Parallel);

/// P(j) = (1/d^2) sum_{(k,l) in pairs} omega^{(k-l) j}, j = 0..d-1.
std::vector<double> occupation(std::size_t d, const LabelPairs& pairs, Execution exec = Execution::Parallel);

/// p_hat(a) = sum_j p(j) omega^{a j} with omega = exp(2 pi i / d), d = p.size().
std::vector<std::complex<double>> character_transform(std::span<const double> p,
                                                      Execution exec = Execution::Parallel);

/// Multiplies rho(k, l) (eigenbasis) by the finite-horizon average of
/// exp(-i (lambda_k - lambda_l) t) over [0, horizon]; entries in the same
/// cluster are left untouched.
void damp_coherences(Eigen::MatrixXcd& rho, std::span<const double> eigenvalues,
                     std::span<const std::size_t> cluster_of, double horizon,
                     Execution exec = Execution::Parallel);

/// (1 - exp(-i delta T)) / (i delta T), continuous at delta T = 0.
std::complex<double> horizon_average(double delta, double horizon);

}  // namespace clockwalk::kernels
