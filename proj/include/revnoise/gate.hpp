#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "revnoise/bits.hpp"

namespace revnoise {

enum class GateKind { Not, Cnot, Toffoli, Maj3, Perm };

inline constexpr std::uint32_t kMaxGateArity = 16;

/// A k-wire reversible gate: a bijection on {0,1}^k stored as an explicit
/// permutation table. Local indices pack the gate's wire list in order,
/// first listed wire as the most significant bit, so table rows read like
/// truth-table rows.
struct ReversibleGate {
    GateKind kind = GateKind::Perm;
    std::uint32_t arity = 0;
    std::vector<std::uint32_t> table;

    std::uint32_t table_size() const { return 1u << arity; }

    static ReversibleGate not_gate() { return {GateKind::Not, 1, {1, 0}}; }

    // (c,t) -> (c, t^c)
    static ReversibleGate cnot() { return {GateKind::Cnot, 2, {0, 1, 3, 2}}; }

    // (a,b,t) -> (a, b, t^(a&b))
    static ReversibleGate toffoli() { return {GateKind::Toffoli, 3, {0, 1, 2, 3, 4, 5, 7, 6}}; }

    /// Majority vote on three wires: swaps 100 and 011, fixes the other six
    /// triples; the first output bit carries the majority of the inputs.
    static ReversibleGate maj3() { return {GateKind::Maj3, 3, {0, 1, 2, 4, 3, 5, 6, 7}}; }

    static ReversibleGate perm(std::vector<std::uint32_t> perm_table) {
        std::size_t n = perm_table.size();
        std::uint32_t k = 0;
        while ((std::size_t{1} << k) < n && k <= kMaxGateArity) ++k;
        if (n == 0 || (std::size_t{1} << k) != n || k > kMaxGateArity)
            throw std::invalid_argument("perm table size must be 2^k, k in 1..16");
        return {GateKind::Perm, k, std::move(perm_table)};
    }

    /// Swap of two wires as an explicit permutation gate.
    static ReversibleGate swap() { return {GateKind::Perm, 2, {0, 2, 1, 3}}; }

    /// (a,b,t) -> (a, b, t^(a|b)); the OR analogue of the Toffoli.
    static ReversibleGate or_accumulate() {
        return {GateKind::Perm, 3, {0, 1, 3, 2, 5, 4, 7, 6}};
    }

    bool is_permutation() const {
        if (table.size() != table_size()) return false;
        std::vector<std::uint32_t> sorted = table;
        std::sort(sorted.begin(), sorted.end());
        for (std::uint32_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != i) return false;
        return true;
    }

    std::string name() const {
        switch (kind) {
            case GateKind::Not: return "not";
            case GateKind::Cnot: return "cnot";
            case GateKind::Toffoli: return "toffoli";
            case GateKind::Maj3: return "maj3";
            case GateKind::Perm: {
                std::string s = "perm[";
                for (std::size_t i = 0; i < table.size(); ++i) {
                    if (i) s += ',';
                    s += std::to_string(table[i]);
                }
                return s + "]";
            }
        }
        return "?";
    }
};

/// Applies a gate's permutation to the bits at `wires`, leaving every other
/// bit of the packed state untouched.
inline Word apply_gate(Word state, std::uint32_t width, const ReversibleGate& gate,
                       std::span<const std::uint32_t> wires) {
    if (wires.size() != gate.arity)
        throw std::invalid_argument("gate arity does not match wire count");
    std::uint32_t local = 0;
    for (std::uint32_t j = 0; j < gate.arity; ++j) {
        if (wires[j] >= width) throw std::invalid_argument("gate wire out of range");
        local = (local << 1) | static_cast<std::uint32_t>(get_bit(state, width, wires[j]));
    }
    std::uint32_t image = gate.table[local];
    for (std::uint32_t j = 0; j < gate.arity; ++j)
        state = set_bit(state, width, wires[j],
                        static_cast<int>((image >> (gate.arity - 1 - j)) & 1u));
    return state;
}

} // namespace revnoise
