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

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "clockwalk/kernels.hpp"

namespace clockwalk::kernels {

namespace detail {
StructureTally scan_one(const ClockOperator& op, std::uint64_t b, std::vector<std::uint64_t>& scratch,
                        std::vector<std::pair<std::uint64_t, std::uint32_t>>& row,
                        std::vector<std::pair<std::uint64_t, std::uint32_t>>& back);
}  // namespace detail

namespace omp {

int max_threads() { return omp_get_max_threads(); }

StructureTally structure_scan(const ClockOperator& op, std::uint64_t begin, std::uint64_t end) {
    StructureTally total;
    const auto first = static_cast<std::int64_t>(begin);
    const auto last = static_cast<std::int64_t>(end);
#pragma omp parallel
    {
        StructureTally local;
        std::vector<std::uint64_t> scratch;
        std::vector<std::pair<std::uint64_t, std::uint32_t>> row, back;
#pragma omp for schedule(static) nowait
        for (std::int64_t b = first; b < last; ++b) {
            local.merge(detail::scan_one(op, static_cast<std::uint64_t>(b), scratch, row, back));
        }
#pragma omp critical(clockwalk_structure_merge)
        total.merge(local);
    }
    return total;
}

std::vector<double> occupation(std::size_t d, const LabelPairs& pairs) {
    std::vector<double> cos_table(d);
    for (std::size_t m = 0; m < d; ++m) {
        cos_table[m] = std::cos(2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(d));
    }
    const double norm = 1.0 / (static_cast<double>(d) * static_cast<double>(d));
    std::vector<double> p(d);
    const auto n = static_cast<std::int64_t>(d);
#pragma omp parallel for schedule(static)
    for (std::int64_t jj = 0; jj < n; ++jj) {
        const auto j = static_cast<std::size_t>(jj);
        double acc = 0.0;
        for (auto [k, l] : pairs) {
            std::size_t diff = (k + d - l) % d;
            acc += cos_table[(diff * j) % d];
        }
        p[j] = acc * norm;
    }
    return p;
}

std::vector<std::complex<double>> character_transform(std::span<const double> p) {
    const std::size_t d = p.size();
    std::vector<std::complex<double>> table(d);
    for (std::size_t m = 0; m < d; ++m) {
        table[m] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(d));
    }
    std::vector<std::complex<double>> out(d);
    const auto n = static_cast<std::int64_t>(d);
#pragma omp parallel for schedule(static)
    for (std::int64_t aa = 0; aa < n; ++aa) {
        const auto a = static_cast<std::size_t>(aa);
        std::complex<double> acc = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            acc += p[j] * table[(a * j) % d];
        }
        out[a] = acc;
    }
    return out;
}

void damp_coherences(Eigen::MatrixXcd& rho, std::span<const double> eigenvalues,
                     std::span<const std::size_t> cluster_of, double horizon) {
    const auto n = rho.rows();
#pragma omp parallel for schedule(static)
    for (Eigen::Index l = 0; l < n; ++l) {
        for (Eigen::Index k = 0; k < n; ++k) {
            if (cluster_of[k] != cluster_of[l]) {
                rho(k, l) *= horizon_average(eigenvalues[k] - eigenvalues[l], horizon);
            }
        }
    }
}

}  // namespace omp
}  // namespace clockwalk::kernels
