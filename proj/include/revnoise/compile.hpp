#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "revnoise/boolean_circuit.hpp"
#include "revnoise/circuit.hpp"

namespace revnoise {

// ---------------------------------------------------------------------------
// Threshold arithmetic
// ---------------------------------------------------------------------------

struct ThresholdCheck {
    bool holds = false;
    double bound = 0.0;   // 3((2k+1)p)^2 + ((2k+1)p)^3
    double margin = 0.0;  // p - bound
};

/// Whether the per-level error recursion of the majority encoding contracts:
/// a good bit entering a level with error <= p leaves its majority vote with
/// error <= 3((2k+1)p)^2 + ((2k+1)p)^3, which must be <= p again.
inline ThresholdCheck threshold_holds(double p, std::uint32_t k) {
    if (!(p >= 0.0 && p < 0.5)) throw std::invalid_argument("p must be in [0, 1/2)");
    if (k < 1) throw std::invalid_argument("fan-in k must be >= 1");
    double q = (2.0 * k + 1.0) * p;
    ThresholdCheck c;
    c.bound = 3.0 * q * q + q * q * q;
    c.margin = p - c.bound;
    c.holds = c.bound <= p;
    return c;
}

struct EncodingParams {
    std::uint32_t d = 0;  // replication exponent; each wire becomes 3^d wires
    std::uint32_t k = 3;  // max gate fan-in of the source circuit
    double p = 0.0;       // target physical flip probability

    void check() const {
        if (k < 1) throw std::invalid_argument("fan-in k must be >= 1");
        if (!(p >= 0.0 && p < 0.5)) throw std::invalid_argument("p must be in [0, 1/2)");
    }
};

// ---------------------------------------------------------------------------
// Boolean -> reversible (Bennett-style, forward only)
// ---------------------------------------------------------------------------
//
// Inputs occupy wires 0..n-1; every AND/OR/FANOUT/const node gets one fresh
// zero ancilla, written exactly once:
//   AND    -> Toffoli              (a, b, 0) -> (a, b, a&b)
//   OR     -> or-accumulate perm   (a, b, 0) -> (a, b, a|b)
//   FANOUT -> CNOT copy            (a, 0)    -> (a, a)
//   NOT    -> in-place NOT on the operand's wire (no ancilla).
// In-place NOT destroys the operand value, so the compiler rejects circuits
// where a NOT's operand (or the output node) has any other consumer; insert a
// FANOUT node to keep a copy. Gate controls are non-destructive, so sharing a
// value across AND/OR/FANOUT consumers needs no copies.
//
// Gates land in the layer of their node's level; when two same-level gates
// touch a common wire the level is split into consecutive layers.

inline ReversibleCircuit to_reversible(const BooleanCircuit& bc) {
    auto violations = validate_boolean(bc);
    if (!violations.empty())
        throw std::invalid_argument("invalid boolean circuit:\n" + describe(violations));

    std::vector<std::uint32_t> consumers(bc.nodes.size(), 0);
    std::vector<bool> not_consumed(bc.nodes.size(), false);
    for (const auto& n : bc.nodes)
        for (std::uint32_t a : n.args) {
            ++consumers[a];
            if (n.kind == NodeKind::Not) not_consumed[a] = true;
        }
    for (std::size_t id = 0; id < bc.nodes.size(); ++id) {
        if (not_consumed[id] && consumers[id] > 1)
            throw std::invalid_argument(
                "node " + std::to_string(id) +
                " feeds a NOT and another consumer; copy it through a fanout node");
        if (not_consumed[id] && id == bc.output_node)
            throw std::invalid_argument(
                "output node is destroyed by an in-place NOT; copy it through a fanout node");
    }

    // Wire assignment: inputs first, then one fresh ancilla per value-bearing
    // node, in id order. NOT nodes alias their operand's wire.
    std::vector<std::uint32_t> wire(bc.nodes.size(), 0);
    std::uint32_t next_wire = bc.num_inputs;
    std::vector<std::size_t> by_level(bc.nodes.size());
    for (std::size_t i = 0; i < by_level.size(); ++i) by_level[i] = i;
    std::stable_sort(by_level.begin(), by_level.end(), [&](std::size_t a, std::size_t b) {
        return bc.nodes[a].level < bc.nodes[b].level;
    });
    for (std::size_t id : by_level) {
        const auto& n = bc.nodes[id];
        switch (n.kind) {
            case NodeKind::Input: wire[id] = n.input_index; break;
            case NodeKind::Not: wire[id] = wire[n.args[0]]; break;
            default: wire[id] = next_wire++; break;
        }
    }

    ReversibleCircuit rc;
    rc.width = next_wire;
    rc.result_wire = wire[bc.output_node];

    // Emit gates level by level, first-fit packing within a level so that
    // same-layer gates stay wire-disjoint.
    std::uint32_t depth = bc.depth();
    for (std::uint32_t level = 1; level <= depth; ++level) {
        std::size_t level_start = rc.layers.size();
        auto place = [&](GateApplication app) {
            for (std::size_t li = level_start; li < rc.layers.size(); ++li) {
                bool clash = false;
                for (const auto& existing : rc.layers[li].gates)
                    for (std::uint32_t w : existing.wires)
                        for (std::uint32_t v : app.wires)
                            if (w == v) clash = true;
                if (!clash) {
                    rc.layers[li].gates.push_back(std::move(app));
                    return;
                }
            }
            rc.layers.emplace_back();
            rc.layers.back().gates.push_back(std::move(app));
        };
        for (std::size_t id : by_level) {
            const auto& n = bc.nodes[id];
            if (n.level != level) continue;
            switch (n.kind) {
                case NodeKind::Input:
                case NodeKind::Const0: break;
                case NodeKind::Const1:
                    place({ReversibleGate::not_gate(), {wire[id]}});
                    break;
                case NodeKind::Not:
                    place({ReversibleGate::not_gate(), {wire[id]}});
                    break;
                case NodeKind::Fanout:
                    place({ReversibleGate::cnot(), {wire[n.args[0]], wire[id]}});
                    break;
                case NodeKind::And:
                case NodeKind::Or:
                    if (wire[n.args[0]] == wire[n.args[1]])
                        throw std::invalid_argument(
                            "node " + std::to_string(id) +
                            " reads one wire twice; copy the operand through a fanout node");
                    place({n.kind == NodeKind::And ? ReversibleGate::toffoli()
                                                   : ReversibleGate::or_accumulate(),
                           {wire[n.args[0]], wire[n.args[1]], wire[id]}});
                    break;
            }
        }
    }
    return rc;
}

// ---------------------------------------------------------------------------
// Fault-tolerant majority-replication encoding
// ---------------------------------------------------------------------------

inline std::uint64_t pow3(std::uint32_t e) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r *= 3;
    return r;
}

/// Where the logical values live inside an encoded circuit. Simulated step i
/// starts with 3^(d-i) good replicas per source wire, spaced 3^i apart within
/// the wire's block of 3^d physical wires; step i's gate layer acts on them
/// replica-wise and its majority layer votes consecutive triples down to the
/// 3^(d-i-1) good replicas of step i+1.
struct EncodingLayout {
    std::uint32_t d = 0;
    std::uint32_t source_width = 0;
    struct Step {
        std::size_t gate_layer = 0;
        std::size_t majority_layer = 0;
    };
    std::vector<Step> steps;
    std::size_t replicated_gates = 0;
    std::size_t majority_gates = 0;

    std::uint64_t block() const { return pow3(d); }

    std::uint64_t good_count(std::uint32_t step) const { return pow3(d - step); }

    std::uint32_t good_wire(std::uint32_t source_wire, std::uint32_t step,
                            std::uint64_t replica) const {
        return static_cast<std::uint32_t>(source_wire * block() + replica * pow3(step));
    }

    std::vector<std::uint32_t> good_wires(std::uint32_t source_wire, std::uint32_t step) const {
        std::vector<std::uint32_t> out;
        for (std::uint64_t j = 0; j < good_count(step); ++j)
            out.push_back(good_wire(source_wire, step, j));
        return out;
    }
};

struct EncodedCircuit {
    ReversibleCircuit circuit;
    EncodingLayout layout;
};

/// Replicates each source bit 3^d times, block by block; encoded circuits
/// consume their inputs in this layout.
inline Word replicate_input(Word input, std::uint32_t source_width, std::uint32_t d) {
    std::uint64_t b = pow3(d);
    std::uint64_t width = source_width * b;
    if (width > kMaxPackedWidth)
        throw ResourceLimitError("replicated input too wide to pack", width, kMaxPackedWidth);
    Word out = 0;
    for (std::uint32_t w = 0; w < source_width; ++w)
        if (get_bit(input, source_width, w))
            for (std::uint64_t j = 0; j < b; ++j)
                out = set_bit(out, static_cast<std::uint32_t>(width),
                              static_cast<std::uint32_t>(w * b + j), 1);
    return out;
}

/// The majority-replication encoding: each source wire becomes 3^d wires and
/// each of d simulated steps contributes a (possibly empty) replicated gate
/// layer followed by a majority layer, so the encoded depth is exactly 2d and
/// the schedule seen by the noisy simulator per step is
/// noise -> gates -> noise -> majority. Sources shallower than d are padded
/// with idle gate layers; the majority cadence never pauses.
inline EncodedCircuit encode_fault_tolerant(const ReversibleCircuit& rc,
                                            const EncodingParams& params) {
    params.check();
    auto violations = validate(rc);
    if (!violations.empty())
        throw std::invalid_argument("invalid source circuit:\n" + describe(violations));
    if (rc.depth() > params.d)
        throw std::invalid_argument("source depth " + std::to_string(rc.depth()) +
                                    " exceeds replication budget d=" + std::to_string(params.d));
    std::uint64_t block = pow3(params.d);
    std::uint64_t width64 = rc.width * block;
    if (width64 > 0xFFFFFFFFull)
        throw std::invalid_argument("encoded width overflows 32 bits");

    EncodedCircuit enc;
    enc.layout.d = params.d;
    enc.layout.source_width = rc.width;
    enc.circuit.width = static_cast<std::uint32_t>(width64);
    enc.circuit.result_wire = static_cast<std::uint32_t>(rc.result_wire * block);

    for (std::uint32_t step = 0; step < params.d; ++step) {
        std::uint64_t stride = pow3(step);
        std::uint64_t replicas = pow3(params.d - step);

        Layer gate_layer;
        if (step < rc.depth()) {
            for (const auto& app : rc.layers[step].gates) {
                for (std::uint64_t j = 0; j < replicas; ++j) {
                    GateApplication copy;
                    copy.gate = app.gate;
                    copy.wires.reserve(app.wires.size());
                    for (std::uint32_t w : app.wires)
                        copy.wires.push_back(
                            static_cast<std::uint32_t>(w * block + j * stride));
                    gate_layer.gates.push_back(std::move(copy));
                    ++enc.layout.replicated_gates;
                }
            }
        }
        enc.circuit.layers.push_back(std::move(gate_layer));

        Layer majority_layer;
        for (std::uint32_t w = 0; w < rc.width; ++w) {
            for (std::uint64_t t = 0; t < replicas / 3; ++t) {
                GateApplication maj{ReversibleGate::maj3(),
                                    {static_cast<std::uint32_t>(w * block + (3 * t) * stride),
                                     static_cast<std::uint32_t>(w * block + (3 * t + 1) * stride),
                                     static_cast<std::uint32_t>(w * block + (3 * t + 2) * stride)}};
                majority_layer.gates.push_back(std::move(maj));
                ++enc.layout.majority_gates;
            }
        }
        enc.circuit.layers.push_back(std::move(majority_layer));

        enc.layout.steps.push_back({2 * std::size_t{step}, 2 * std::size_t{step} + 1});
    }
    return enc;
}

} // namespace revnoise
