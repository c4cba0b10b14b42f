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

#include "clockwalk/circuit.hpp"
#include "clockwalk/errors.hpp"
#include "reference.hpp"

using namespace clockwalk;

namespace {

std::string error_of(std::string_view text) {
    try {
        parse_circuit(text);
    } catch (const ValidationError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Circuit, parse_gates_and_roles) {
    auto c = parse_circuit("# and\nwires 3\nrole 0 input\nrole 1 input\nrole 2 output\nccx 0 1 2  # compute\n");
    ASSERT_EQ(c.width(), 3u);
    ASSERT_EQ(c.size(), 1u);
    ASSERT_EQ(c[0], Gate::ccx(0, 1, 2));
    ASSERT_EQ(c.wires_with_role(WireRole::Input), (std::vector<Wire>{0, 1}));
    ASSERT_EQ(c.role(2), WireRole::Output);
    ASSERT_FALSE(c.role(0) == WireRole::Scratch);
}

TEST(Circuit, parse_errors_carry_line_numbers) {
    ASSERT_EQ(error_of("wires 2\nx 0\nfoo 1\n").rfind("line 3:", 0), 0u);
    ASSERT_NE(error_of("wires 3\ncx 1 1\n").find("duplicate wire"), std::string::npos);
    ASSERT_NE(error_of("wires 3\nccx 0 1 3\n").find("out of range"), std::string::npos);
    ASSERT_EQ(error_of("wires 3\nccx 0 1 3\n").rfind("line 2:", 0), 0u);
    ASSERT_NE(error_of("x 0\n").find("wires"), std::string::npos);
    ASSERT_NE(error_of("wires 2\ncx 0\n").find("takes 2"), std::string::npos);
    ASSERT_NE(error_of("wires 2\nrole 0 clock\n").find("unknown role"), std::string::npos);
    ASSERT_NE(error_of("wires 0\n").find("width"), std::string::npos);
    ASSERT_NE(error_of("wires 65\n").find("width"), std::string::npos);
    ASSERT_NE(error_of("wires 2\nx -1\n").find("non-negative"), std::string::npos);
    ASSERT_NE(error_of("").find("no 'wires'"), std::string::npos);
}

TEST(Circuit, load_missing_file_names_path) {
    try {
        load_circuit("/nonexistent/dir/g.rev");
        FAIL();
    } catch (const ValidationError& e) {
        ASSERT_NE(std::string(e.what()).find("/nonexistent/dir/g.rev"), std::string::npos);
    }
}

TEST(Circuit, format_round_trip) {
    auto c = parse_circuit("wires 4\nrole 3 scratch\nrole 0 input\nx 2\ncx 0 3\nccx 3 2 1\n");
    auto again = parse_circuit(format_circuit(c));
    ASSERT_EQ(again.gates(), c.gates());
    ASSERT_EQ(again.width(), c.width());
    for (Wire w = 0; w < 4; ++w) {
        ASSERT_EQ(again.role(w), c.role(w));
    }
}

TEST(Circuit, gates_match_reference) {
    ASSERT_EQ(Gate::x(1).apply(0b000), 0b010u);
    ASSERT_EQ(Gate::cx(0, 2).apply(0b001), 0b101u);
    ASSERT_EQ(Gate::cx(0, 2).apply(0b100), 0b100u);
    ASSERT_EQ(Gate::ccx(0, 1, 2).apply(0b011), 0b111u);
    ASSERT_EQ(Gate::ccx(0, 1, 2).apply(0b001), 0b001u);
    ASSERT_EQ(Gate::ccx(0, 1, 2).support().size(), 3u);
    ASSERT_EQ(Gate::cx(4, 7).target(), 7u);
}

TEST(Circuit, simulate_bit_strings) {
    auto c = parse_circuit("wires 3\nccx 0 1 2\n");
    ASSERT_EQ(simulate_circuit(c, BitString::parse("110")).str(), "111");
    ASSERT_EQ(simulate_circuit(c, BitString::parse("100")).str(), "100");
    ASSERT_THROW(simulate_circuit(c, BitString::parse("11")), ValidationError);
    ASSERT_THROW(BitString::parse("10a"), ValidationError);
    ASSERT_EQ(BitString::parse("0101").word(), 0b1010u);
}

TEST(Circuit, append_validates) {
    ReversibleCircuit c(3);
    ASSERT_THROW(c.append(Gate::cx(0, 3)), ValidationError);
    ASSERT_THROW(c.append(Gate::ccx(0, 0, 1)), ValidationError);
    ASSERT_THROW(ReversibleCircuit(0), ValidationError);
    ASSERT_THROW(c.set_role(5, WireRole::Input), ValidationError);
}

TEST(Circuit, random_circuits_match_reference_and_invert) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int width = 3 + static_cast<int>(rng() % 6);
        ReversibleCircuit c(width);
        std::vector<ref::Gate> rg;
        for (int k = 0; k < 12; ++k) {
            std::vector<int> w(width);
            std::iota(w.begin(), w.end(), 0);
            std::shuffle(w.begin(), w.end(), rng);
            switch (rng() % 3) {
                case 0:
                    c.append(Gate::x(w[0]));
                    rg.push_back(ref::x(w[0]));
                    break;
                case 1:
                    c.append(Gate::cx(w[0], w[1]));
                    rg.push_back(ref::cx(w[0], w[1]));
                    break;
                default:
                    c.append(Gate::ccx(w[0], w[1], w[2]));
                    rg.push_back(ref::ccx(w[0], w[1], w[2]));
            }
        }
        const Word in = rng() & ((Word{1} << width) - 1);
        std::vector<int> bits(width);
        for (int i = 0; i < width; ++i) {
            bits[i] = (in >> i) & 1;
        }
        const auto expect = ref::run(rg, bits);
        const Word out = c.run(in);
        for (int i = 0; i < width; ++i) {
            ASSERT_EQ(static_cast<int>((out >> i) & 1u), expect[i]);
        }
        ASSERT_EQ(c.reversed().run(out), in);
    }
}
