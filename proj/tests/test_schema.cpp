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

#include <gtest/gtest.h>

#include "clockwalk/circuit.hpp"
#include "clockwalk/errors.hpp"
#include "clockwalk/schema.hpp"
#include "reference.hpp"

using namespace clockwalk;

namespace {

const char* kAnd = "wires 3\nrole 0 input\nrole 1 input\nrole 2 output\nccx 0 1 2\n";

std::string error_of(std::string_view text) {
    try {
        build_toggle_schema(parse_circuit(text));
    } catch (const ValidationError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Schema, toggle_layout_for_and) {
    const auto s = build_toggle_schema(parse_circuit(kAnd));
    ASSERT_EQ(s.circuit.width(), 5u);
    ASSERT_EQ(s.circuit.size(), 6u);
    ASSERT_EQ(s.descriptor.repetitions, 2u);
    ASSERT_EQ(s.descriptor.counter_bits, 1u);
    ASSERT_EQ(s.descriptor.input_wires, (std::vector<Wire>{0, 1}));
    ASSERT_EQ(s.descriptor.predicate_wire, 2u);
    ASSERT_EQ(s.descriptor.output_wire(), 3u);
    ASSERT_EQ(s.descriptor.toggle_wire, 4u);

    const auto expect = ref::toggle_schema({ref::ccx(0, 1, 2)}, 3, 2);
    ASSERT_EQ(expect.size(), s.circuit.size());
    for (std::size_t k = 0; k < expect.size(); ++k) {
        std::vector<int> got(s.circuit[k].support().begin(), s.circuit[k].support().end());
        std::vector<int> want = expect[k].controls;
        want.push_back(expect[k].target);
        ASSERT_EQ(got, want) << "gate " << k;
    }
}

TEST(Schema, toggle_applies_predicate_every_two_rounds) {
    const auto s = build_toggle_schema(parse_circuit(kAnd));
    for (Word x = 0; x < 4; ++x) {
        for (Word y = 0; y < 2; ++y) {
            Word reg = schema_register(s.descriptor, x, y);
            const Word once = s.circuit.run(reg);
            ASSERT_EQ(s.circuit.run(once), schema_register(s.descriptor, x, y ^ (x == 3)));
        }
        ASSERT_EQ(schema_predicate(s, x), x == 3);
    }
}

TEST(Schema, counter_increments) {
    for (unsigned c = 1; c <= 4; ++c) {
        const auto s = build_counter_schema(parse_circuit(kAnd), c);
        ASSERT_EQ(s.circuit.width(), 3 + c + 1 + (c - 1));
        ASSERT_EQ(s.circuit.size(), 1 + 1 + (3 * c - 2) + 1 + 1 + 1);
        ASSERT_EQ(s.descriptor.output_wires.size(), c);
        const Word mask = (Word{1} << c) - 1;
        for (Word x = 0; x < 4; ++x) {
            for (Word y = 0; y <= mask; ++y) {
                Word reg = schema_register(s.descriptor, x, y);
                reg = s.circuit.run(s.circuit.run(reg));
                ASSERT_EQ(reg, schema_register(s.descriptor, x, (y + (x == 3)) & mask));
            }
        }
    }
    const auto one = build_counter_schema(parse_circuit(kAnd), 1);
    ASSERT_EQ(one.circuit.gates(), build_toggle_schema(parse_circuit(kAnd)).circuit.gates());
    ASSERT_THROW(build_counter_schema(parse_circuit(kAnd), 0), ValidationError);
}

TEST(Schema, inputs_default_to_unmarked_wires) {
    const auto s = build_toggle_schema(parse_circuit("wires 3\nrole 2 output\ncx 0 2\ncx 1 2\n"));
    ASSERT_EQ(s.descriptor.input_wires, (std::vector<Wire>{0, 1}));
    const auto t = build_toggle_schema(parse_circuit("wires 3\nrole 2 scratch\ncx 0 2\n"));
    ASSERT_EQ(t.descriptor.predicate_wire, 2u);
    ASSERT_EQ(t.descriptor.input_wires, (std::vector<Wire>{0, 1}));
}

TEST(Schema, rejects_bad_predicates) {
    ASSERT_NE(error_of("wires 2\nrole 1 output\n").find("empty"), std::string::npos);
    ASSERT_NE(error_of("wires 2\nrole 0 input\nrole 1 output\ncx 0 1\nx 0\n").find("modifies its input"),
              std::string::npos);
    ASSERT_NE(error_of("wires 3\nrole 0 input\nrole 1 scratch\nrole 2 output\ncx 0 1\ncx 0 2\n")
                  .find("does not restore scratch wire 1"),
              std::string::npos);
    ASSERT_NE(error_of("wires 3\nrole 0 input\nrole 1 output\nrole 2 output\ncx 0 1\n").find("result wire"),
              std::string::npos);
    try {
        build_toggle_schema(parse_circuit("wires 3\nrole 0 input\nrole 1 output\nrole 2 output\ncx 0 2\n"), Wire{2});
        FAIL();
    } catch (const ValidationError& e) {
        ASSERT_NE(std::string(e.what()).find("reserved wire"), std::string::npos);
    }
    ASSERT_NE(error_of("wires 3\nrole 0 input\nrole 1 toggle\nrole 2 output\ncx 0 2\n").find("reserved wire"),
              std::string::npos);
    ASSERT_NE(error_of("wires 2\ncx 0 1\n").find("result wire"), std::string::npos);
}

TEST(Schema, explicit_result_wire) {
    const auto s = build_toggle_schema(parse_circuit("wires 2\ncx 0 1\n"), Wire{1});
    ASSERT_EQ(s.descriptor.predicate_wire, 1u);
    ASSERT_EQ(s.descriptor.input_wires, (std::vector<Wire>{0}));
    ASSERT_THROW(build_toggle_schema(parse_circuit("wires 2\ncx 0 1\n"), Wire{5}), ValidationError);
}

TEST(Schema, wide_inputs_are_sampled) {
    // 20 input wires: too many for the exhaustive contract check.
    std::string text = "wires 21\nrole 20 output\n";
    for (int i = 0; i < 20; ++i) {
        text += "role " + std::to_string(i) + " input\n";
    }
    text += "cx 0 20\ncx 19 20\n";
    const auto s = build_toggle_schema(parse_circuit(text));
    ASSERT_EQ(s.descriptor.input_wires.size(), 20u);
    ASSERT_TRUE(schema_predicate(s, Word{1}));
    ASSERT_FALSE(schema_predicate(s, (Word{1} << 19) | 1));
}
