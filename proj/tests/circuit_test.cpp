#include "revnoise/circuit.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "revnoise/rng.hpp"

namespace revnoise {
namespace {

ReversibleCircuit single_not() {
    ReversibleCircuit c;
    c.width = 1;
    c.layers.push_back({{{ReversibleGate::not_gate(), {0}}}});
    return c;
}

/// Seeded random layered circuit over the named gate set.
ReversibleCircuit random_circuit(std::uint32_t width, std::size_t depth, DetRng& rng) {
    ReversibleCircuit c;
    c.width = width;
    for (std::size_t li = 0; li < depth; ++li) {
        Layer layer;
        std::vector<std::uint32_t> avail(width);
        for (std::uint32_t w = 0; w < width; ++w) avail[w] = w;
        // Fisher-Yates with the deterministic engine.
        for (std::size_t i = avail.size(); i > 1; --i)
            std::swap(avail[i - 1], avail[rng.uniform_index(i)]);
        std::size_t pos = 0;
        while (pos < avail.size()) {
            std::size_t remaining = avail.size() - pos;
            std::uint64_t pick = rng.uniform_index(4);
            if (pick == 0 || remaining == 1) {
                layer.gates.push_back({ReversibleGate::not_gate(), {avail[pos]}});
                pos += 1;
            } else if (pick == 1 || remaining == 2) {
                layer.gates.push_back({ReversibleGate::cnot(), {avail[pos], avail[pos + 1]}});
                pos += 2;
            } else if (pick == 2) {
                layer.gates.push_back(
                    {ReversibleGate::toffoli(), {avail[pos], avail[pos + 1], avail[pos + 2]}});
                pos += 3;
            } else {
                layer.gates.push_back(
                    {ReversibleGate::maj3(), {avail[pos], avail[pos + 1], avail[pos + 2]}});
                pos += 3;
            }
        }
        c.layers.push_back(std::move(layer));
    }
    return c;
}

TEST(Validate, MinimalCircuitIsValid) {
    EXPECT_TRUE(validate(single_not()).empty());
}

TEST(Validate, SharedWireInLayerReported) {
    ReversibleCircuit c;
    c.width = 4;
    c.layers.push_back({{{ReversibleGate::cnot(), {0, 2}}, {ReversibleGate::cnot(), {2, 3}}}});
    auto v = validate(c);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].layer, 0u);
    EXPECT_NE(v[0].message.find("two gates"), std::string::npos);
}

TEST(Validate, NonBijectivePermReported) {
    ReversibleCircuit c;
    c.width = 2;
    c.layers.push_back({{{ReversibleGate{GateKind::Perm, 2, {5, 1, 5, 0}}, {0, 1}}}});
    auto v = validate(c);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_NE(v[0].message.find("bijection"), std::string::npos);
}

TEST(Validate, OutOfRangeWireAndArityReported) {
    ReversibleCircuit c;
    c.width = 2;
    c.layers.push_back({{{ReversibleGate::cnot(), {0, 5}}}});
    c.layers.push_back({{{ReversibleGate::toffoli(), {0, 1}}}});
    auto v = validate(c);
    ASSERT_EQ(v.size(), 2u);
    EXPECT_NE(v[0].message.find("out of range"), std::string::npos);
    EXPECT_EQ(v[1].layer, 1u);
    EXPECT_NE(v[1].message.find("arity"), std::string::npos);
}

TEST(Evaluate, EmptyCircuitIsIdentity) {
    ReversibleCircuit c;
    c.width = 4;
    for (Word s = 0; s < 16; ++s) EXPECT_EQ(evaluate_noiseless(c, s), s);
}

TEST(Evaluate, Maj3CircuitKeepsMajorityOnFirstWire) {
    ReversibleCircuit c;
    c.width = 3;
    c.layers.push_back({{{ReversibleGate::maj3(), {0, 1, 2}}}});
    EXPECT_EQ(format_bits(evaluate_noiseless(c, parse_bits("110")), 3), "110");
    EXPECT_EQ(format_bits(evaluate_noiseless(c, parse_bits("100")), 3), "011");
    for (Word s = 0; s < 8; ++s) {
        int majority = ((s >> 2) & 1) + ((s >> 1) & 1) + (s & 1) >= 2 ? 1 : 0;
        EXPECT_EQ(get_bit(evaluate_noiseless(c, s), 3, 0), majority);
    }
}

TEST(Evaluate, WidthMismatchRejected) {
    EXPECT_THROW(evaluate_noiseless(single_not(), 0b10), std::invalid_argument);
}

TEST(Evaluate, RandomCircuitsComputePermutations) {
    DetRng rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        auto c = random_circuit(6, 4, rng);
        ASSERT_TRUE(validate(c).empty());
        std::set<Word> image;
        for (Word s = 0; s < 64; ++s) image.insert(evaluate_noiseless(c, s));
        EXPECT_EQ(image.size(), 64u);
    }
}

TEST(Evaluate, GateOrderWithinLayerIsImmaterial) {
    DetRng rng(11);
    std::mt19937_64 shuffler(3);
    for (int rep = 0; rep < 10; ++rep) {
        auto c = random_circuit(7, 3, rng);
        auto shuffled = c;
        for (auto& layer : shuffled.layers)
            std::shuffle(layer.gates.begin(), layer.gates.end(), shuffler);
        for (Word s = 0; s < 128; ++s)
            EXPECT_EQ(evaluate_noiseless(c, s), evaluate_noiseless(shuffled, s));
    }
}

TEST(TextFormat, RoundTripWithPermAndIdleLayers) {
    ReversibleCircuit c;
    c.width = 5;
    c.result_wire = 2;
    c.layers.resize(4);  // layers 1 and 3 stay idle
    c.layers[0].gates.push_back({ReversibleGate::toffoli(), {0, 1, 2}});
    c.layers[0].gates.push_back({ReversibleGate::swap(), {3, 4}});
    c.layers[2].gates.push_back({ReversibleGate::maj3(), {2, 3, 4}});
    std::string text = serialize_circuit(c);
    ReversibleCircuit back = parse_circuit(text);
    EXPECT_EQ(back.width, c.width);
    EXPECT_EQ(back.result_wire, c.result_wire);
    ASSERT_EQ(back.depth(), 4u);
    EXPECT_TRUE(back.layers[1].gates.empty());
    EXPECT_TRUE(back.layers[3].gates.empty());
    for (Word s = 0; s < 32; ++s)
        EXPECT_EQ(evaluate_noiseless(back, s), evaluate_noiseless(c, s));
    EXPECT_EQ(serialize_circuit(back), text);
}

TEST(TextFormat, ParsesCommentsAndBlankLines) {
    auto c = parse_circuit(
        "# a 3-wire majority\n"
        "width 3 result 0\n"
        "\n"
        "0 maj3 0,1,2  # vote\n");
    EXPECT_EQ(c.width, 3u);
    ASSERT_EQ(c.depth(), 1u);
    EXPECT_EQ(c.layers[0].gates[0].gate.kind, GateKind::Maj3);
}

TEST(TextFormat, ErrorsCarryLineNumbers) {
    try {
        parse_circuit("width 3 result 0\n0 maj3 0,1,2\n1 frobnicate 0\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW(parse_circuit("0 not 0\n"), ParseError);      // missing header
    EXPECT_THROW(parse_circuit("width 3 result 0\n0 not zero\n"), ParseError);
}

} // namespace
} // namespace revnoise
