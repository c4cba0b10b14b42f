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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "clockwalk/kernels.hpp"

namespace clockwalk::kernels {

void StructureTally::merge(const StructureTally& other) {
    symmetric = symmetric && other.symmetric;
    entries_01 = entries_01 && other.entries_01;
    zero_diagonal = zero_diagonal && other.zero_diagonal;
    max_entry = std::max(max_entry, other.max_entry);
    edges += other.edges;
}

std::complex<double> horizon_average(double delta, double horizon) {
    const double x = delta * horizon;
    if (std::abs(x) < 1e-8) {
        // Series: 1 - i x/2 - x^2/6 + ...
        return {1.0 - x * x / 6.0, -x / 2.0};
    }
    // (1 - e^{-ix}) / (ix) = (sin x)/x + i (cos x - 1)/x
    const double h = std::sin(0.5 * x);
    return {std::sin(x) / x, -2.0 * h * h / x};
}

namespace detail {

/// Weighted A-images of one basis index, as sorted (index, multiplicity).
void a_images(const ClockOperator& op, std::uint64_t index, std::vector<std::uint64_t>& scratch,
              std::vector<std::pair<std::uint64_t, std::uint32_t>>& out) {
    scratch.clear();
    out.clear();
    const BasisState s = op.decode(index);
    auto push = [&](const BasisState& img) { scratch.push_back(op.encode(img)); };
    op.for_each_image(s, Direction::Forward, push);
    op.for_each_image(s, Direction::Backward, push);
    std::sort(scratch.begin(), scratch.end());
    for (std::uint64_t v : scratch) {
        if (!out.empty() && out.back().first == v) {
            ++out.back().second;
        } else {
            out.emplace_back(v, 1);
        }
    }
}

StructureTally scan_one(const ClockOperator& op, std::uint64_t b, std::vector<std::uint64_t>& scratch,
                        std::vector<std::pair<std::uint64_t, std::uint32_t>>& row,
                        std::vector<std::pair<std::uint64_t, std::uint32_t>>& back) {
    StructureTally t;
    a_images(op, b, scratch, row);
    for (auto [v, mult] : row) {
        t.max_entry = std::max(t.max_entry, mult);
        if (mult != 1) {
            t.entries_01 = false;
        }
        if (v == b) {
            t.zero_diagonal = false;
            continue;
        }
        if (v > b) {
            ++t.edges;
        }
        a_images(op, v, scratch, back);
        auto it = std::lower_bound(back.begin(), back.end(), std::make_pair(b, std::uint32_t{0}));
        if (it == back.end() || it->first != b || it->second != mult) {
            t.symmetric = false;
        }
    }
    return t;
}

}  // namespace detail

namespace serial {

StructureTally structure_scan(const ClockOperator& op, std::uint64_t begin, std::uint64_t end) {
    StructureTally total;
    std::vector<std::uint64_t> scratch;
    std::vector<std::pair<std::uint64_t, std::uint32_t>> row, back;
    for (std::uint64_t b = begin; b < end; ++b) {
        total.merge(detail::scan_one(op, b, scratch, row, back));
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
    for (std::size_t j = 0; j < d; ++j) {
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
    for (std::size_t a = 0; a < d; ++a) {
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
    for (Eigen::Index l = 0; l < n; ++l) {
        for (Eigen::Index k = 0; k < n; ++k) {
            if (cluster_of[k] != cluster_of[l]) {
                rho(k, l) *= horizon_average(eigenvalues[k] - eigenvalues[l], horizon);
            }
        }
    }
}

}  // namespace serial

StructureTally structure_scan(const ClockOperator& op, std::uint64_t begin, std::uint64_t end, Execution exec) {
    return exec == Execution::Serial ? serial::structure_scan(op, begin, end) : omp::structure_scan(op, begin, end);
}

std::vector<double> occupation(std::size_t d, const LabelPairs& pairs, Execution exec) {
    return exec == Execution::Serial ? serial::occupation(d, pairs) : omp::occupation(d, pairs);
}

std::vector<std::complex<double>> character_transform(std::span<const double> p, Execution exec) {
    return exec == Execution::Serial ? serial::character_transform(p) : omp::character_transform(p);
}

void damp_coherences(Eigen::MatrixXcd& rho, std::span<const double> eigenvalues,
                     std::span<const std::size_t> cluster_of, double horizon, Execution exec) {
    if (exec == Execution::Serial) {
        serial::damp_coherences(rho, eigenvalues, cluster_of, horizon);
    } else {
        omp::damp_coherences(rho, eigenvalues, cluster_of, horizon);
    }
}

}  // namespace clockwalk::kernels
