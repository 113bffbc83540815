#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "revnoise/errors.hpp"
#include "revnoise/gate.hpp"

namespace revnoise {

struct GateApplication {
    ReversibleGate gate;
    std::vector<std::uint32_t> wires;
};

/// One time step; gates in a layer act on disjoint wires and fire together.
/// A layer may be empty (all wires idle for one time unit — idle wires still
/// take noise in the noisy simulators).
struct Layer {
    std::vector<GateApplication> gates;
};

/// Width-N, depth-D schedule of disjoint reversible gates. Values are
/// immutable after construction as far as the simulators are concerned;
/// evaluation never mutates the circuit.
struct ReversibleCircuit {
    std::uint32_t width = 0;
    std::vector<Layer> layers;
    std::uint32_t result_wire = 0;

    std::size_t depth() const { return layers.size(); }

    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& layer : layers) n += layer.gates.size();
        return n;
    }
};

/// A structural invariant violation, with its location. Violations are data,
/// not failures; valid circuits produce an empty list.
struct Violation {
    std::string message;
    std::size_t layer = 0;
    std::size_t gate_index = 0;
};

inline std::vector<Violation> validate(const ReversibleCircuit& circuit) {
    std::vector<Violation> out;
    if (circuit.width == 0)
        out.push_back({"circuit width must be positive", 0, 0});
    if (circuit.width > 0 && circuit.result_wire >= circuit.width)
        out.push_back({"result wire out of range", 0, 0});
    for (std::size_t li = 0; li < circuit.layers.size(); ++li) {
        std::vector<bool> used(circuit.width, false);
        const auto& layer = circuit.layers[li];
        for (std::size_t gi = 0; gi < layer.gates.size(); ++gi) {
            const auto& app = layer.gates[gi];
            if (!app.gate.is_permutation()) {
                out.push_back({"gate table is not a bijection", li, gi});
                continue;
            }
            if (app.wires.size() != app.gate.arity) {
                out.push_back({"gate arity does not match wire count", li, gi});
                continue;
            }
            for (std::uint32_t w : app.wires) {
                if (w >= circuit.width) {
                    out.push_back({"wire index out of range", li, gi});
                } else if (used[w]) {
                    out.push_back({"wire used by two gates in one layer", li, gi});
                } else {
                    used[w] = true;
                }
            }
        }
    }
    return out;
}

inline std::string describe(const std::vector<Violation>& violations) {
    std::string s;
    for (const auto& v : violations) {
        s += "layer " + std::to_string(v.layer) + " gate " + std::to_string(v.gate_index) +
             ": " + v.message + "\n";
    }
    return s;
}

/// Applies the layers in order with zero noise; returns the final state.
inline Word evaluate_noiseless(const ReversibleCircuit& circuit, Word input) {
    if (circuit.width > kMaxPackedWidth)
        throw ResourceLimitError("circuit too wide for packed evaluation", circuit.width,
                                 kMaxPackedWidth);
    if (circuit.width < kMaxPackedWidth && (input >> circuit.width) != 0)
        throw std::invalid_argument("input has bits beyond the circuit width");
    Word state = input;
    for (const auto& layer : circuit.layers)
        for (const auto& app : layer.gates)
            state = apply_gate(state, circuit.width, app.gate, app.wires);
    return state;
}

/// Applies a single layer to a packed state.
inline Word apply_layer(const Layer& layer, std::uint32_t width, Word state) {
    for (const auto& app : layer.gates)
        state = apply_gate(state, width, app.gate, app.wires);
    return state;
}

// ---------------------------------------------------------------------------
// Text format: header `width N result R [depth D]`, then one gate per line,
// `layer gate wire,wire,...`. The depth field preserves trailing idle layers
// (a pure-delay circuit has no gate lines at all). '#' starts a comment.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream iss(line);
    std::vector<std::string> tokens;
    std::string t;
    while (iss >> t) tokens.push_back(t);
    return tokens;
}

inline std::vector<std::uint32_t> parse_u32_list(const std::string& text, std::size_t line_no) {
    std::vector<std::uint32_t> out;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (cur.empty()) throw ParseError("empty entry in list '" + text + "'", line_no);
            try {
                out.push_back(static_cast<std::uint32_t>(std::stoul(cur)));
            } catch (const std::exception&) {
                throw ParseError("bad integer '" + cur + "'", line_no);
            }
            cur.clear();
        } else if (c >= '0' && c <= '9') {
            cur += c;
        } else {
            throw ParseError("unexpected character in list '" + text + "'", line_no);
        }
    }
    return out;
}

inline ReversibleGate parse_gate_token(const std::string& token, std::size_t line_no) {
    if (token == "not") return ReversibleGate::not_gate();
    if (token == "cnot") return ReversibleGate::cnot();
    if (token == "toffoli") return ReversibleGate::toffoli();
    if (token == "maj3") return ReversibleGate::maj3();
    if (token.rfind("perm[", 0) == 0 && token.back() == ']') {
        auto body = token.substr(5, token.size() - 6);
        try {
            return ReversibleGate::perm(parse_u32_list(body, line_no));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    throw ParseError("unknown gate '" + token + "'", line_no);
}

} // namespace detail

inline ReversibleCircuit parse_circuit(std::istream& in) {
    ReversibleCircuit circuit;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = detail::split_ws(detail::strip_comment(line));
        if (tokens.empty()) continue;
        if (!have_header) {
            if (tokens.size() < 4 || tokens[0] != "width" || tokens[2] != "result")
                throw ParseError("expected header 'width N result R [depth D]'", line_no);
            try {
                circuit.width = static_cast<std::uint32_t>(std::stoul(tokens[1]));
                circuit.result_wire = static_cast<std::uint32_t>(std::stoul(tokens[3]));
                if (tokens.size() >= 6 && tokens[4] == "depth")
                    circuit.layers.resize(std::stoul(tokens[5]));
                else if (tokens.size() != 4)
                    throw ParseError("trailing tokens after header", line_no);
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception&) {
                throw ParseError("bad integer in header", line_no);
            }
            have_header = true;
            continue;
        }
        if (tokens.size() != 3)
            throw ParseError("expected 'layer gate wire,wire,...'", line_no);
        std::size_t layer_index;
        try {
            layer_index = std::stoul(tokens[0]);
        } catch (const std::exception&) {
            throw ParseError("bad layer index '" + tokens[0] + "'", line_no);
        }
        GateApplication app{detail::parse_gate_token(tokens[1], line_no),
                            detail::parse_u32_list(tokens[2], line_no)};
        if (layer_index >= circuit.layers.size()) circuit.layers.resize(layer_index + 1);
        circuit.layers[layer_index].gates.push_back(std::move(app));
    }
    if (!have_header) throw ParseError("missing header 'width N result R'", line_no + 1);
    return circuit;
}

inline ReversibleCircuit parse_circuit(const std::string& text) {
    std::istringstream iss(text);
    return parse_circuit(iss);
}

inline void serialize_circuit(const ReversibleCircuit& circuit, std::ostream& out) {
    out << "width " << circuit.width << " result " << circuit.result_wire << " depth "
        << circuit.depth() << "\n";
    for (std::size_t li = 0; li < circuit.layers.size(); ++li) {
        for (const auto& app : circuit.layers[li].gates) {
            out << li << ' ' << app.gate.name() << ' ';
            for (std::size_t i = 0; i < app.wires.size(); ++i)
                out << (i ? "," : "") << app.wires[i];
            out << "\n";
        }
    }
}

inline std::string serialize_circuit(const ReversibleCircuit& circuit) {
    std::ostringstream oss;
    serialize_circuit(circuit, oss);
    return oss.str();
}

} // namespace revnoise
