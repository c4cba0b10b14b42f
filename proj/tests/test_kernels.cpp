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

#include <random>

#include <gtest/gtest.h>

#include "clockwalk/analysis.hpp"
#include "clockwalk/kernels.hpp"
#include "testing.hpp"

using namespace clockwalk;
namespace k = clockwalk::kernels;

TEST(Kernels, structure_scan_serial_equals_parallel) {
    for (const char* name : {"and.rev", "xor.rev", "copy.rev"}) {
        const auto op = build_forward_operator(testing_util::toggle(name).circuit);
        const auto n = op.full_dimension();
        ASSERT_EQ(k::serial::structure_scan(op, 0, n), k::omp::structure_scan(op, 0, n)) << name;
        // split ranges merge to the whole
        auto lo = k::serial::structure_scan(op, 0, n / 3);
        lo.merge(k::serial::structure_scan(op, n / 3, n));
        ASSERT_EQ(lo, k::serial::structure_scan(op, 0, n));
    }
}

TEST(Kernels, occupation_serial_equals_parallel) {
    for (std::size_t d : {2u, 12u, 24u, 100u, 998u}) {
        const auto pairs = restricted_spectrum(d).degenerate_pairs();
        const auto a = k::serial::occupation(d, pairs);
        const auto b = k::omp::occupation(d, pairs);
        ASSERT_EQ(a, b) << d;
        ASSERT_EQ(k::serial::character_transform(a), k::omp::character_transform(a)) << d;
    }
}

TEST(Kernels, damping_serial_equals_parallel) {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    const int n = 40;
    Eigen::MatrixXcd rho(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            rho(i, j) = {g(rng), g(rng)};
        }
    }
    std::vector<double> vals(n);
    std::vector<std::size_t> cluster(n);
    for (int i = 0; i < n; ++i) {
        vals[i] = 0.1 * (i / 2);
        cluster[i] = i / 2;
    }
    Eigen::MatrixXcd a = rho, b = rho;
    k::serial::damp_coherences(a, vals, cluster, 37.0);
    k::omp::damp_coherences(b, vals, cluster, 37.0);
    ASSERT_TRUE(a == b);
    ASSERT_EQ(a(0, 1), rho(0, 1));
    ASSERT_NE(a(0, 2), rho(0, 2));
}

TEST(Kernels, horizon_average) {
    ASSERT_EQ(k::horizon_average(0.0, 10.0), std::complex<double>(1.0, 0.0));
    for (double x : {1e-9, 1e-7, 1e-3, 0.5, 3.0, 40.0}) {
        const std::complex<double> i(0, 1);
        const auto expect = (1.0 - std::exp(-i * x)) / (i * x);
        ASSERT_NEAR(std::abs(k::horizon_average(x, 1.0) - expect), 0.0, x < 1e-6 ? 1e-8 : 1e-14) << x;
    }
    ASSERT_EQ(k::horizon_average(-0.3, 2.0), std::conj(k::horizon_average(0.3, 2.0)));
}

TEST(Kernels, dispatch) {
    ASSERT_GE(k::omp::max_threads(), 1);
    const auto pairs = restricted_spectrum(12).degenerate_pairs();
    ASSERT_EQ(k::occupation(12, pairs, k::Execution::Serial), k::occupation(12, pairs, k::Execution::Parallel));
}
