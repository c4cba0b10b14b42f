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

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace clockwalk {

using Wire = std::uint32_t;

/// Packed classical register: wire i lives in bit i. Widths are capped at 64.
using Word = std::uint64_t;

inline constexpr std::size_t kMaxWidth = 64;

enum class GateKind : std::uint8_t { Not, Cnot, Toffoli };

/// A classical reversible gate. Controls come first, the target last.
struct Gate {
    GateKind kind = GateKind::Not;
    std::array<Wire, 3> wires{};

    static Gate x(Wire target);
    static Gate cx(Wire control, Wire target);
    static Gate ccx(Wire control1, Wire control2, Wire target);

    std::size_t arity() const;
    std::span<const Wire> support() const { return {wires.data(), arity()}; }
    std::span<const Wire> controls() const { return {wires.data(), arity() - 1}; }
    Wire target() const { return wires[arity() - 1]; }

    /// Applies the gate to a packed register. Every gate is an involution.
    Word apply(Word bits) const {
        Word mask = 0;
        for (Wire c : controls()) {
            mask |= Word{1} << c;
        }
        if ((bits & mask) == mask) {
            bits ^= Word{1} << target();
        }
        return bits;
    }

    bool operator==(const Gate&) const = default;
};

std::string to_string(const Gate& gate);

enum class WireRole : std::uint8_t { Input, Output, Scratch, Toggle };

std::string_view to_string(WireRole role);
std::optional<WireRole> parse_role(std::string_view text);

/// Fixed-width bit string. Character 0 of the text form is wire 0.
class BitString {
   public:
    BitString() = default;
    BitString(Word bits, std::size_t width);

    static BitString parse(std::string_view text);

    std::size_t width() const { return width_; }
    Word word() const { return bits_; }
    bool operator[](std::size_t i) const { return (bits_ >> i) & 1u; }
    std::string str() const;

    bool operator==(const BitString&) const = default;

   private:
    Word bits_ = 0;
    std::size_t width_ = 0;
};

/// Ordered list of NOT/CNOT/TOFFOLI gates on `width` work wires, with
/// optional wire roles.
class ReversibleCircuit {
   public:
    ReversibleCircuit() = default;
    explicit ReversibleCircuit(std::size_t width);

    std::size_t width() const { return width_; }
    std::size_t size() const { return gates_.size(); }
    const std::vector<Gate>& gates() const { return gates_; }
    const Gate& operator[](std::size_t k) const { return gates_[k]; }

    /// Throws ValidationError for out-of-range or repeated wires.
    void append(const Gate& gate);
    void append(const ReversibleCircuit& other);

    void set_role(Wire wire, WireRole role);
    std::optional<WireRole> role(Wire wire) const;
    std::vector<Wire> wires_with_role(WireRole role) const;

    /// Gates in reverse order. Since every gate is an involution this is the
    /// inverse permutation.
    ReversibleCircuit reversed() const;

    /// Image of a packed register under the whole circuit.
    Word run(Word bits) const;

   private:
    std::size_t width_ = 0;
    std::vector<Gate> gates_;
    std::vector<std::optional<WireRole>> roles_;
};

/// Parses the line-based circuit format:
///
///     wires <m>
///     role <wire> <input|output|scratch|toggle>
///     x <t> | cx <c> <t> | ccx <c1> <c2> <t>
///
/// '#' starts a comment. Errors carry the 1-based line number.
ReversibleCircuit parse_circuit(std::string_view text);
ReversibleCircuit load_circuit(const std::string& path);

/// Inverse of parse_circuit; the output parses back to an equal circuit.
std::string format_circuit(const ReversibleCircuit& circuit);

/// Throws ValidationError if `input.width()` differs from the circuit width.
BitString simulate_circuit(const ReversibleCircuit& circuit, const BitString& input);

}  // namespace clockwalk
