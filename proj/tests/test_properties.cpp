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
#include "clockwalk/orbit.hpp"
#include "clockwalk/schema.hpp"
#include "reference.hpp"

using namespace clockwalk;

namespace {

/// Random predicate on `inputs` input wires: compute into scratch wires,
/// copy the last scratch wire to the result, uncompute.
struct RandomPredicate {
    ReversibleCircuit circuit;
    std::vector<ref::Gate> compute;
    int inputs, scratch, result;
};

RandomPredicate random_predicate(std::mt19937_64& rng) {
    const int inputs = 1 + static_cast<int>(rng() % 3);
    const int scratch = 1 + static_cast<int>(rng() % 2);
    const int width = inputs + scratch + 1;
    RandomPredicate p{ReversibleCircuit(width), {}, inputs, scratch, width - 1};
    for (int i = 0; i < inputs; ++i) {
        p.circuit.set_role(i, WireRole::Input);
    }
    for (int i = 0; i < scratch; ++i) {
        p.circuit.set_role(inputs + i, WireRole::Scratch);
    }
    p.circuit.set_role(p.result, WireRole::Output);
    const int gates = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < gates; ++k) {
        const int t = inputs + static_cast<int>(rng() % scratch);
        std::vector<int> pool;
        for (int w = 0; w < inputs + scratch; ++w) {
            if (w != t) {
                pool.push_back(w);
            }
        }
        std::shuffle(pool.begin(), pool.end(), rng);
        const int kind = pool.size() >= 2 ? static_cast<int>(rng() % 3) : static_cast<int>(rng() % 2);
        if (kind == 0) {
            p.compute.push_back(ref::x(t));
        } else if (kind == 1) {
            p.compute.push_back(ref::cx(pool[0], t));
        } else {
            p.compute.push_back(ref::ccx(pool[0], pool[1], t));
        }
    }
    auto to_gate = [](const ref::Gate& g) {
        if (g.controls.empty()) {
            return Gate::x(g.target);
        }
        if (g.controls.size() == 1) {
            return Gate::cx(g.controls[0], g.target);
        }
        return Gate::ccx(g.controls[0], g.controls[1], g.target);
    };
    for (const auto& g : p.compute) {
        p.circuit.append(to_gate(g));
    }
    p.circuit.append(Gate::cx(inputs + scratch - 1, p.result));
    for (auto it = p.compute.rbegin(); it != p.compute.rend(); ++it) {
        p.circuit.append(to_gate(*it));
    }
    return p;
}

}  // namespace

TEST(Properties, orbit_length_follows_predicate) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const auto p = random_predicate(rng);
        const auto s = build_toggle_schema(p.circuit);
        const auto op = build_forward_operator(s.circuit);
        const std::size_t sr = 2 * s.circuit.size();
        for (Word x = 0; x < (Word{1} << p.inputs); ++x) {
            std::vector<int> bits(p.inputs + p.scratch + 1, 0);
            for (int i = 0; i < p.inputs; ++i) {
                bits[i] = (x >> i) & 1;
            }
            const bool f = ref::run(p.compute, bits)[p.inputs + p.scratch - 1] == 1;
            ASSERT_EQ(schema_predicate(s, x), f);
            const auto orbit = enumerate_orbit(op, op.initial_state(schema_register(s.descriptor, x, 0)),
                                               default_orbit_cap(op.clock_width(), s.descriptor));
            ASSERT_EQ(orbit.dimension(), f ? 2 * sr : sr);
            ASSERT_EQ(classify_instance(orbit, s.descriptor), f ? Classification::Yes : Classification::No);
            const auto q = reduce_output_qubit(orbit, occupation_distribution(orbit.dimension()),
                                               s.descriptor.output_wire());
            if (f) {
                ASSERT_NEAR(q(1, 1).real(), 0.5, 1e-12);
            } else {
                ASSERT_EQ(q(1, 1).real(), 0.0);
            }
        }
    }
}

TEST(Properties, structure_matches_dense_reference) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 3);
        const int s = 2 + static_cast<int>(rng() % (11 - m));
        ReversibleCircuit c(m);
        std::vector<ref::Gate> rg;
        for (int k = 0; k < s; ++k) {
            std::vector<int> w(m);
            std::iota(w.begin(), w.end(), 0);
            std::shuffle(w.begin(), w.end(), rng);
            const int kind = static_cast<int>(rng() % std::min(3, m));
            if (kind == 0) {
                c.append(Gate::x(w[0]));
                rg.push_back(ref::x(w[0]));
            } else if (kind == 1) {
                c.append(Gate::cx(w[0], w[1]));
                rg.push_back(ref::cx(w[0], w[1]));
            } else {
                c.append(Gate::ccx(w[0], w[1], w[2]));
                rg.push_back(ref::ccx(w[0], w[1], w[2]));
            }
        }
        const auto r = verify_structure(build_forward_operator(c), 1 << 14);
        const Eigen::MatrixXd a = ref::hamiltonian(rg, m);
        ASSERT_EQ(r.is_symmetric, a == a.transpose());
        ASSERT_EQ(r.zero_diagonal, a.diagonal().isZero());
        ASSERT_EQ(r.max_entry, static_cast<std::uint32_t>(a.maxCoeff()));
        ASSERT_EQ(r.entries_01, a.maxCoeff() <= 1.0);
        if (s >= 3) {
            ASSERT_TRUE(r.entries_01);
        }
        ASSERT_LE(r.max_term_support, 5u);
        std::uint64_t edges = 0;
        for (int u = 0; u < a.rows(); ++u) {
            for (int v = u + 1; v < a.cols(); ++v) {
                edges += a(u, v) != 0;
            }
        }
        ASSERT_EQ(r.edges, edges);
    }
}

TEST(Properties, ds_inequality_on_random_distributions) {
    std::mt19937_64 rng(31);
    std::exponential_distribution<double> e;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = 2 + rng() % 60;
        std::vector<double> p(d);
        double total = 0.0;
        for (auto& v : p) {
            v = e(rng);
            if (rng() % 4 == 0) {
                v = 0.0;
            }
            total += v;
        }
        if (total == 0.0) {
            continue;
        }
        for (auto& v : p) {
            v /= total;
        }
        const auto b = ds_bound(make_distribution(p));
        ASSERT_TRUE(b.inequality_holds()) << d;
        ASSERT_NEAR(b.l1, 2 * b.tv, 1e-15);
    }
}

TEST(Properties, entropy_closed_form_random_d) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t d = 2 * (1 + rng() % 300);
        ASSERT_NEAR(von_neumann_entropy(time_average_orbit(d)), closed_form_entropy(d), 1e-10) << d;
    }
}
