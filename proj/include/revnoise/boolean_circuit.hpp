#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "revnoise/bits.hpp"
#include "revnoise/circuit.hpp"

namespace revnoise {

enum class NodeKind { Input, Const0, Const1, And, Or, Not, Fanout };

struct BoolNode {
    NodeKind kind = NodeKind::Input;
    std::uint32_t level = 0;
    std::vector<std::uint32_t> args;  // predecessor node ids
    std::uint32_t input_index = 0;    // for Input nodes
};

/// Leveled AND/OR/NOT/FANOUT DAG. Node ids index `nodes`; a node's level must
/// strictly exceed every predecessor's (which also forces acyclicity).
struct BooleanCircuit {
    std::vector<BoolNode> nodes;
    std::uint32_t output_node = 0;
    std::uint32_t num_inputs = 0;

    std::uint32_t depth() const {
        std::uint32_t d = 0;
        for (const auto& n : nodes) d = std::max(d, n.level);
        return d;
    }

    /// Gate count (inputs and constants excluded).
    std::size_t size() const {
        std::size_t s = 0;
        for (const auto& n : nodes)
            if (n.kind == NodeKind::And || n.kind == NodeKind::Or || n.kind == NodeKind::Not ||
                n.kind == NodeKind::Fanout)
                ++s;
        return s;
    }
};

inline std::uint32_t node_fan_in(NodeKind kind) {
    switch (kind) {
        case NodeKind::And:
        case NodeKind::Or: return 2;
        case NodeKind::Not:
        case NodeKind::Fanout: return 1;
        default: return 0;
    }
}

inline std::vector<Violation> validate_boolean(const BooleanCircuit& bc) {
    std::vector<Violation> out;
    if (bc.nodes.empty()) {
        out.push_back({"boolean circuit has no nodes", 0, 0});
        return out;
    }
    if (bc.output_node >= bc.nodes.size())
        out.push_back({"output node out of range", 0, 0});
    for (std::size_t id = 0; id < bc.nodes.size(); ++id) {
        const auto& n = bc.nodes[id];
        if (n.args.size() != node_fan_in(n.kind))
            out.push_back({"wrong fan-in for node", 0, id});
        for (std::uint32_t a : n.args) {
            if (a >= bc.nodes.size())
                out.push_back({"predecessor id out of range", 0, id});
            else if (bc.nodes[a].level >= n.level)
                out.push_back({"node level does not exceed predecessor level", 0, id});
        }
        if (n.kind == NodeKind::Input && n.input_index >= bc.num_inputs)
            out.push_back({"input index out of range", 0, id});
        if (n.kind != NodeKind::Input && n.kind != NodeKind::Const0 && n.level == 0)
            out.push_back({"gate/const1 node at level 0", 0, id});
    }
    return out;
}

/// Direct truth-table evaluation of the DAG; the reference every compiled
/// circuit is checked against.
inline bool evaluate_boolean(const BooleanCircuit& bc, Word input) {
    std::vector<int> value(bc.nodes.size(), -1);
    // Levels strictly increase along edges, so evaluating in level order works;
    // node ids are not required to be topologically sorted.
    std::vector<std::size_t> order(bc.nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return bc.nodes[a].level < bc.nodes[b].level;
    });
    for (std::size_t id : order) {
        const auto& n = bc.nodes[id];
        switch (n.kind) {
            case NodeKind::Input: value[id] = get_bit(input, bc.num_inputs, n.input_index); break;
            case NodeKind::Const0: value[id] = 0; break;
            case NodeKind::Const1: value[id] = 1; break;
            case NodeKind::Not: value[id] = 1 - value[n.args[0]]; break;
            case NodeKind::Fanout: value[id] = value[n.args[0]]; break;
            case NodeKind::And: value[id] = value[n.args[0]] & value[n.args[1]]; break;
            case NodeKind::Or: value[id] = value[n.args[0]] | value[n.args[1]]; break;
        }
    }
    return value[bc.output_node] == 1;
}

// ---------------------------------------------------------------------------
// Text format: header `inputs N output J`, then one node per line,
// `id level kind [args]` where kind is input <pos> | const0 | const1 |
// and a b | or a b | not a | fanout a. '#' starts a comment.
// ---------------------------------------------------------------------------

inline BooleanCircuit parse_boolean_circuit(std::istream& in) {
    BooleanCircuit bc;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    auto to_u32 = [&](const std::string& s) {
        try {
            return static_cast<std::uint32_t>(std::stoul(s));
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + s + "'", line_no);
        }
    };
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = detail::split_ws(detail::strip_comment(line));
        if (tokens.empty()) continue;
        if (!have_header) {
            if (tokens.size() != 4 || tokens[0] != "inputs" || tokens[2] != "output")
                throw ParseError("expected header 'inputs N output J'", line_no);
            bc.num_inputs = to_u32(tokens[1]);
            bc.output_node = to_u32(tokens[3]);
            have_header = true;
            continue;
        }
        if (tokens.size() < 3) throw ParseError("expected 'id level kind [args]'", line_no);
        std::uint32_t id = to_u32(tokens[0]);
        BoolNode node;
        node.level = to_u32(tokens[1]);
        const std::string& kind = tokens[2];
        auto args = [&](std::size_t n) {
            if (tokens.size() != 3 + n)
                throw ParseError("wrong argument count for '" + kind + "'", line_no);
            for (std::size_t i = 0; i < n; ++i) node.args.push_back(to_u32(tokens[3 + i]));
        };
        if (kind == "input") {
            if (tokens.size() != 4) throw ParseError("input needs a position", line_no);
            node.kind = NodeKind::Input;
            node.input_index = to_u32(tokens[3]);
        } else if (kind == "const0") {
            node.kind = NodeKind::Const0;
            args(0);
        } else if (kind == "const1") {
            node.kind = NodeKind::Const1;
            args(0);
        } else if (kind == "and") {
            node.kind = NodeKind::And;
            args(2);
        } else if (kind == "or") {
            node.kind = NodeKind::Or;
            args(2);
        } else if (kind == "not") {
            node.kind = NodeKind::Not;
            args(1);
        } else if (kind == "fanout") {
            node.kind = NodeKind::Fanout;
            args(1);
        } else {
            throw ParseError("unknown node kind '" + kind + "'", line_no);
        }
        if (id >= bc.nodes.size()) bc.nodes.resize(id + 1);
        bc.nodes[id] = std::move(node);
    }
    if (!have_header) throw ParseError("missing header 'inputs N output J'", line_no + 1);
    return bc;
}

inline BooleanCircuit parse_boolean_circuit(const std::string& text) {
    std::istringstream iss(text);
    return parse_boolean_circuit(iss);
}

inline void serialize_boolean_circuit(const BooleanCircuit& bc, std::ostream& out) {
    out << "inputs " << bc.num_inputs << " output " << bc.output_node << "\n";
    for (std::size_t id = 0; id < bc.nodes.size(); ++id) {
        const auto& n = bc.nodes[id];
        out << id << ' ' << n.level << ' ';
        switch (n.kind) {
            case NodeKind::Input: out << "input " << n.input_index; break;
            case NodeKind::Const0: out << "const0"; break;
            case NodeKind::Const1: out << "const1"; break;
            case NodeKind::And: out << "and " << n.args[0] << ' ' << n.args[1]; break;
            case NodeKind::Or: out << "or " << n.args[0] << ' ' << n.args[1]; break;
            case NodeKind::Not: out << "not " << n.args[0]; break;
            case NodeKind::Fanout: out << "fanout " << n.args[0]; break;
        }
        out << "\n";
    }
}

} // namespace revnoise
