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

#include "clockwalk/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "clockwalk/errors.hpp"

namespace clockwalk {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

std::optional<std::uint64_t> parse_index(std::string_view token) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        return std::nullopt;
    }
    return value;
}

[[noreturn]] void fail_at(std::size_t line_no, const std::string& message) {
    throw ValidationError("line " + std::to_string(line_no) + ": " + message);
}

}  // namespace

Gate Gate::x(Wire target) { return Gate{GateKind::Not, {target, 0, 0}}; }
Gate Gate::cx(Wire control, Wire target) { return Gate{GateKind::Cnot, {control, target, 0}}; }
Gate Gate::ccx(Wire control1, Wire control2, Wire target) {
    return Gate{GateKind::Toffoli, {control1, control2, target}};
}

std::size_t Gate::arity() const {
    switch (kind) {
        case GateKind::Not:
            return 1;
        case GateKind::Cnot:
            return 2;
        case GateKind::Toffoli:
            return 3;
    }
    return 1;
}

std::string to_string(const Gate& gate) {
    static constexpr std::array<std::string_view, 3> names{"x", "cx", "ccx"};
    std::string out(names[static_cast<std::size_t>(gate.kind)]);
    for (Wire w : gate.support()) {
        out += ' ';
        out += std::to_string(w);
    }
    return out;
}

std::string_view to_string(WireRole role) {
    switch (role) {
        case WireRole::Input:
            return "input";
        case WireRole::Output:
            return "output";
        case WireRole::Scratch:
            return "scratch";
        case WireRole::Toggle:
            return "toggle";
    }
    return "?";
}

std::optional<WireRole> parse_role(std::string_view text) {
    for (WireRole r : {WireRole::Input, WireRole::Output, WireRole::Scratch, WireRole::Toggle}) {
        if (text == to_string(r)) {
            return r;
        }
    }
    return std::nullopt;
}

BitString::BitString(Word bits, std::size_t width) : bits_(bits), width_(width) {
    if (width > kMaxWidth) {
        throw ValidationError("bit string wider than " + std::to_string(kMaxWidth));
    }
    if (width < kMaxWidth && (bits >> width) != 0) {
        throw ValidationError("bit string has bits set beyond its width");
    }
}

BitString BitString::parse(std::string_view text) {
    if (text.size() > kMaxWidth) {
        throw ValidationError("bit string wider than " + std::to_string(kMaxWidth));
    }
    Word bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            bits |= Word{1} << i;
        } else if (text[i] != '0') {
            throw ValidationError("bit string '" + std::string(text) + "' contains a character other than 0/1");
        }
    }
    return BitString(bits, text.size());
}

std::string BitString::str() const {
    std::string out(width_, '0');
    for (std::size_t i = 0; i < width_; ++i) {
        if ((*this)[i]) {
            out[i] = '1';
        }
    }
    return out;
}

ReversibleCircuit::ReversibleCircuit(std::size_t width) : width_(width), roles_(width) {
    if (width == 0 || width > kMaxWidth) {
        throw ValidationError("circuit width must be in [1, " + std::to_string(kMaxWidth) + "], got " +
                              std::to_string(width));
    }
}

void ReversibleCircuit::append(const Gate& gate) {
    auto support = gate.support();
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (support[i] >= width_) {
            throw ValidationError("gate '" + to_string(gate) + "': wire " + std::to_string(support[i]) +
                                  " out of range for width " + std::to_string(width_));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (support[i] == support[j]) {
                throw ValidationError("gate '" + to_string(gate) + "': duplicate wire " +
                                      std::to_string(support[i]));
            }
        }
    }
    gates_.push_back(gate);
}

void ReversibleCircuit::append(const ReversibleCircuit& other) {
    for (const Gate& g : other.gates()) {
        append(g);
    }
}

void ReversibleCircuit::set_role(Wire wire, WireRole role) {
    if (wire >= width_) {
        throw ValidationError("role for wire " + std::to_string(wire) + " out of range for width " +
                              std::to_string(width_));
    }
    roles_[wire] = role;
}

std::optional<WireRole> ReversibleCircuit::role(Wire wire) const {
    return wire < roles_.size() ? roles_[wire] : std::nullopt;
}

std::vector<Wire> ReversibleCircuit::wires_with_role(WireRole role) const {
    std::vector<Wire> out;
    for (Wire w = 0; w < roles_.size(); ++w) {
        if (roles_[w] == role) {
            out.push_back(w);
        }
    }
    return out;
}

ReversibleCircuit ReversibleCircuit::reversed() const {
    ReversibleCircuit out = *this;
    std::reverse(out.gates_.begin(), out.gates_.end());
    return out;
}

Word ReversibleCircuit::run(Word bits) const {
    for (const Gate& g : gates_) {
        bits = g.apply(bits);
    }
    return bits;
}

ReversibleCircuit parse_circuit(std::string_view text) {
    std::optional<ReversibleCircuit> circuit;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto tokens = split_tokens(line);
        if (tokens.empty()) {
            continue;
        }
        std::string_view head = tokens[0];
        std::vector<std::uint64_t> args;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            if (head == "role" && i == 2) {
                continue;
            }
            auto v = parse_index(tokens[i]);
            if (!v) {
                fail_at(line_no, "expected a non-negative integer, got '" + std::string(tokens[i]) + "'");
            }
            args.push_back(*v);
        }

        if (!circuit) {
            if (head != "wires") {
                fail_at(line_no, "expected 'wires <m>' before anything else");
            }
            if (args.size() != 1) {
                fail_at(line_no, "'wires' takes exactly one argument");
            }
            try {
                circuit.emplace(static_cast<std::size_t>(args[0]));
            } catch (const ValidationError& e) {
                fail_at(line_no, e.what());
            }
            continue;
        }

        auto as_wire = [&](std::uint64_t v) {
            if (v >= circuit->width()) {
                fail_at(line_no, "wire " + std::to_string(v) + " out of range for width " +
                                     std::to_string(circuit->width()));
            }
            return static_cast<Wire>(v);
        };

        try {
            if (head == "wires") {
                fail_at(line_no, "duplicate 'wires' declaration");
            } else if (head == "role") {
                if (tokens.size() != 3) {
                    fail_at(line_no, "expected 'role <wire> <input|output|scratch|toggle>'");
                }
                auto role = parse_role(tokens[2]);
                if (!role) {
                    fail_at(line_no, "unknown role '" + std::string(tokens[2]) + "'");
                }
                circuit->set_role(as_wire(args[0]), *role);
            } else if (head == "x" || head == "cx" || head == "ccx") {
                std::size_t want = head == "x" ? 1 : head == "cx" ? 2 : 3;
                if (args.size() != want) {
                    fail_at(line_no, "'" + std::string(head) + "' takes " + std::to_string(want) + " wire(s)");
                }
                std::array<Wire, 3> w{};
                for (std::size_t i = 0; i < want; ++i) {
                    w[i] = as_wire(args[i]);
                }
                Gate g = want == 1 ? Gate::x(w[0]) : want == 2 ? Gate::cx(w[0], w[1]) : Gate::ccx(w[0], w[1], w[2]);
                circuit->append(g);
            } else {
                fail_at(line_no, "unknown directive '" + std::string(head) + "'");
            }
        } catch (const ValidationError& e) {
            std::string what = e.what();
            if (what.rfind("line ", 0) == 0) {
                throw;
            }
            fail_at(line_no, what);
        }
    }
    if (!circuit) {
        throw ValidationError("circuit text has no 'wires' declaration");
    }
    return *std::move(circuit);
}

ReversibleCircuit load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open circuit file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_circuit(buffer.str());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

std::string format_circuit(const ReversibleCircuit& circuit) {
    std::string out = "wires " + std::to_string(circuit.width()) + "\n";
    for (Wire w = 0; w < circuit.width(); ++w) {
        if (auto r = circuit.role(w)) {
            out += "role " + std::to_string(w) + " " + std::string(to_string(*r)) + "\n";
        }
    }
    for (const Gate& g : circuit.gates()) {
        out += to_string(g) + "\n";
    }
    return out;
}

BitString simulate_circuit(const ReversibleCircuit& circuit, const BitString& input) {
    if (input.width() != circuit.width()) {
        throw ValidationError("input has " + std::to_string(input.width()) + " bits but the circuit has " +
                              std::to_string(circuit.width()) + " wires");
    }
    return BitString(circuit.run(input.word()), circuit.width());
}

}  // namespace clockwalk
