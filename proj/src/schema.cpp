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

#include "clockwalk/schema.hpp"

#include <algorithm>
#include <random>

#include "clockwalk/errors.hpp"

namespace clockwalk {

namespace {

constexpr std::size_t kSampleCount = 4096;

Word scatter(Word value, const std::vector<Wire>& wires) {
    Word out = 0;
    for (std::size_t i = 0; i < wires.size(); ++i) {
        if ((value >> i) & 1u) {
            out |= Word{1} << wires[i];
        }
    }
    return out;
}

Word low_mask(std::size_t bits) { return bits >= 64 ? ~Word{0} : (Word{1} << bits) - 1; }

/// Calls fn(assignment) for every assignment of `bits` bits, or for a fixed
/// sample when bits exceeds the cap.
template <typename Fn>
void for_each_assignment(std::size_t bits, std::size_t cap, Fn&& fn) {
    if (bits <= cap) {
        for (Word v = 0; v <= low_mask(bits); ++v) {
            fn(v);
            if (v == low_mask(bits)) {
                break;
            }
        }
        return;
    }
    std::mt19937_64 rng(0x5eedc10c);
    fn(Word{0});
    fn(low_mask(bits));
    for (std::size_t i = 0; i < kSampleCount; ++i) {
        fn(rng() & low_mask(bits));
    }
}

struct PredicateLayout {
    Wire result = 0;
    std::vector<Wire> inputs;
};

PredicateLayout inspect_predicate(const ReversibleCircuit& g, std::optional<Wire> result_wire,
                                  std::size_t check_width) {
    if (g.size() == 0) {
        throw ValidationError("predicate circuit is empty; the schema needs at least one compute gate");
    }
    auto outputs = g.wires_with_role(WireRole::Output);
    auto scratch = g.wires_with_role(WireRole::Scratch);
    if (!g.wires_with_role(WireRole::Toggle).empty()) {
        throw ValidationError("predicate circuit touches a reserved wire: toggle roles are assigned by the schema builder");
    }

    PredicateLayout layout;
    if (result_wire) {
        if (*result_wire >= g.width()) {
            throw ValidationError("predicate result wire " + std::to_string(*result_wire) + " out of range");
        }
        layout.result = *result_wire;
    } else if (outputs.size() == 1) {
        layout.result = outputs.front();
    } else if (outputs.empty() && scratch.size() == 1) {
        layout.result = scratch.front();
    } else {
        throw ValidationError(
            "cannot determine the predicate result wire: mark exactly one wire 'output' (or a single 'scratch')");
    }
    for (Wire w : outputs) {
        if (w != layout.result) {
            throw ValidationError("predicate circuit touches a reserved wire: wire " + std::to_string(w) +
                                  " is marked output but the schema owns the output register");
        }
    }
    if (g.role(layout.result) == WireRole::Input) {
        throw ValidationError("predicate result wire " + std::to_string(layout.result) + " is marked input");
    }

    layout.inputs = g.wires_with_role(WireRole::Input);
    if (layout.inputs.empty()) {
        for (Wire w = 0; w < g.width(); ++w) {
            if (w != layout.result && g.role(w) != WireRole::Scratch) {
                layout.inputs.push_back(w);
            }
        }
    }

    // G must map (x, 0...0) to (x, f(x) on w, 0 elsewhere).
    const Word input_mask = scatter(low_mask(layout.inputs.size()), layout.inputs);
    const Word result_bit = Word{1} << layout.result;
    for_each_assignment(layout.inputs.size(), check_width, [&](Word x) {
        Word before = scatter(x, layout.inputs);
        Word after = g.run(before);
        if ((after & input_mask) != before) {
            throw ValidationError("predicate circuit modifies its input wires (input assignment " +
                                  BitString(x, layout.inputs.size()).str() + ")");
        }
        Word rest = after & ~input_mask & ~result_bit;
        if (rest != 0) {
            Wire bad = 0;
            while (((rest >> bad) & 1u) == 0) {
                ++bad;
            }
            throw ValidationError("predicate circuit does not restore scratch wire " + std::to_string(bad) +
                                  " (input assignment " + BitString(x, layout.inputs.size()).str() + ")");
        }
    });
    return layout;
}

Schema assemble(const ReversibleCircuit& g, const PredicateLayout& layout, unsigned counter_bits) {
    const std::size_t width = g.width() + counter_bits + 1 + (counter_bits - 1);
    if (width > kMaxWidth) {
        throw ValidationError("schema circuit would need " + std::to_string(width) + " wires (max " +
                              std::to_string(kMaxWidth) + ")");
    }
    SchemaDescriptor desc;
    desc.repetitions = 2;
    desc.counter_bits = counter_bits;
    desc.compute_gate_count = g.size();
    desc.input_wires = layout.inputs;
    desc.predicate_wire = layout.result;
    Wire next = static_cast<Wire>(g.width());
    for (unsigned i = 0; i < counter_bits; ++i) {
        desc.output_wires.push_back(next++);
    }
    desc.toggle_wire = next++;
    std::vector<Wire> carry;
    for (unsigned i = 0; i + 1 < counter_bits; ++i) {
        carry.push_back(next++);
    }

    ReversibleCircuit v(width);
    for (Wire w = 0; w < g.width(); ++w) {
        if (std::find(layout.inputs.begin(), layout.inputs.end(), w) != layout.inputs.end()) {
            v.set_role(w, WireRole::Input);
        } else {
            v.set_role(w, WireRole::Scratch);
        }
    }
    for (Wire y : desc.output_wires) {
        v.set_role(y, WireRole::Output);
    }
    v.set_role(desc.toggle_wire, WireRole::Toggle);
    for (Wire a : carry) {
        v.set_role(a, WireRole::Scratch);
    }

    const Wire w = desc.predicate_wire;
    const Wire t = desc.toggle_wire;
    const auto& y = desc.output_wires;

    v.append(g);
    v.append(Gate::x(t));
    // Increment y by one when w and t are both set. carry[j] holds
    // w & t & y[0] & ... & y[j-1]; higher bits flip first so every control
    // still sees the pre-increment value.
    if (counter_bits > 1) {
        v.append(Gate::ccx(w, t, carry[0]));
        for (unsigned j = 1; j + 1 < counter_bits; ++j) {
            v.append(Gate::ccx(carry[j - 1], y[j - 1], carry[j]));
        }
        for (unsigned i = counter_bits - 1; i >= 1; --i) {
            v.append(Gate::ccx(carry[i - 1], y[i - 1], y[i]));
            if (i - 1 == 0) {
                v.append(Gate::ccx(w, t, carry[0]));
            } else {
                v.append(Gate::ccx(carry[i - 2], y[i - 2], carry[i - 1]));
            }
        }
    }
    v.append(Gate::ccx(w, t, y[0]));
    v.append(Gate::x(t));
    v.append(g.reversed());
    v.append(Gate::x(t));
    return Schema{std::move(v), std::move(desc)};
}

}  // namespace

Schema build_toggle_schema(const ReversibleCircuit& predicate, std::optional<Wire> result_wire,
                           std::size_t check_width) {
    return build_counter_schema(predicate, 1, result_wire, check_width);
}

Schema build_counter_schema(const ReversibleCircuit& predicate, unsigned counter_bits,
                            std::optional<Wire> result_wire, std::size_t check_width) {
    if (counter_bits < 1) {
        throw ValidationError("counter width must be at least 1");
    }
    auto layout = inspect_predicate(predicate, result_wire, check_width);
    Schema schema = assemble(predicate, layout, counter_bits);
    check_schema_contract(schema, check_width);
    return schema;
}

Word schema_register(const SchemaDescriptor& descriptor, Word input_assignment, Word output_value) {
    return scatter(input_assignment, descriptor.input_wires) | scatter(output_value, descriptor.output_wires);
}

bool schema_predicate(const Schema& schema, Word input_assignment) {
    const auto& d = schema.descriptor;
    // The first compute_gate_count gates of V are G itself.
    Word reg = scatter(input_assignment, d.input_wires);
    for (std::size_t k = 0; k < d.compute_gate_count; ++k) {
        reg = schema.circuit[k].apply(reg);
    }
    return (reg >> d.predicate_wire) & 1u;
}

void check_schema_contract(const Schema& schema, std::size_t check_width) {
    const auto& d = schema.descriptor;
    const std::size_t in_bits = d.input_wires.size();
    const std::size_t c = d.counter_bits;
    const Word counter_mask = low_mask(c);
    for_each_assignment(in_bits + c, check_width, [&](Word xy) {
        Word x = xy & low_mask(in_bits);
        Word y = (in_bits >= 64) ? 0 : (xy >> in_bits) & counter_mask;
        Word f = schema_predicate(schema, x) ? 1 : 0;
        Word reg = schema_register(d, x, y);
        for (unsigned i = 0; i < d.repetitions; ++i) {
            reg = schema.circuit.run(reg);
        }
        Word expected = schema_register(d, x, (y + f) & counter_mask);
        if (reg != expected) {
            throw ValidationError("schema contract violated for x=" + BitString(x, in_bits).str() + ", y=" +
                                  BitString(y, c).str() + ": got " + BitString(reg, schema.circuit.width()).str() +
                                  ", expected " + BitString(expected, schema.circuit.width()).str());
        }
    });
}

}  // namespace clockwalk
