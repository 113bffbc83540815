#include "revnoise/gate.hpp"

#include <gtest/gtest.h>

#include <set>

#include "revnoise/bits.hpp"

namespace revnoise {
namespace {

TEST(Bits, ParseFormatRoundTrip) {
    EXPECT_EQ(parse_bits("0110"), 6u);
    EXPECT_EQ(parse_bits("100"), 4u);
    EXPECT_EQ(format_bits(4, 3), "100");
    EXPECT_EQ(format_bits(parse_bits("10110"), 5), "10110");
    EXPECT_THROW(parse_bits("01x"), std::invalid_argument);
    EXPECT_THROW(parse_bits(""), std::invalid_argument);
}

TEST(Bits, MsbConvention) {
    // Wire 0 is the most significant bit.
    EXPECT_EQ(get_bit(0b100, 3, 0), 1);
    EXPECT_EQ(get_bit(0b100, 3, 2), 0);
    EXPECT_EQ(set_bit(0, 3, 0, 1), 0b100u);
    EXPECT_EQ(flip_bit(0b100, 3, 2), 0b101u);
}

TEST(Gate, Maj3TableMatchesMajority) {
    auto g = ReversibleGate::maj3();
    ASSERT_TRUE(g.is_permutation());
    for (std::uint32_t in = 0; in < 8; ++in) {
        int b0 = (in >> 2) & 1, b1 = (in >> 1) & 1, b2 = in & 1;
        int majority = (b0 + b1 + b2 >= 2) ? 1 : 0;
        EXPECT_EQ((g.table[in] >> 2) & 1u, static_cast<std::uint32_t>(majority))
            << "input " << in;
    }
    // Exactly the transposition 100 <-> 011; everything else fixed.
    EXPECT_EQ(g.table[0b100], 0b011u);
    EXPECT_EQ(g.table[0b011], 0b100u);
    for (std::uint32_t in : {0b000u, 0b001u, 0b010u, 0b101u, 0b110u, 0b111u})
        EXPECT_EQ(g.table[in], in);
}

TEST(Gate, ApplyMaj3) {
    std::vector<std::uint32_t> wires{0, 1, 2};
    Word out = apply_gate(parse_bits("100"), 3, ReversibleGate::maj3(), wires);
    EXPECT_EQ(format_bits(out, 3), "011");
}

TEST(Gate, ApplyToffoli) {
    std::vector<std::uint32_t> wires{0, 1, 2};
    Word out = apply_gate(parse_bits("110"), 3, ReversibleGate::toffoli(), wires);
    EXPECT_EQ(format_bits(out, 3), "111");
}

TEST(Gate, ApplyOnSubsetOfWires) {
    // CNOT on wires (3, 1) of a width-4 state: control wire 3, target wire 1.
    std::vector<std::uint32_t> wires{3, 1};
    EXPECT_EQ(format_bits(apply_gate(parse_bits("0001"), 4, ReversibleGate::cnot(), wires), 4),
              "0101");
    EXPECT_EQ(format_bits(apply_gate(parse_bits("0100"), 4, ReversibleGate::cnot(), wires), 4),
              "0100");
}

TEST(Gate, DoubleApplicationComposesPermutation) {
    // Applying any gate twice composes it with itself; NOT is an involution.
    std::vector<std::uint32_t> w{0};
    for (Word s : {Word{0}, Word{1}}) {
        Word once = apply_gate(s, 1, ReversibleGate::not_gate(), w);
        Word twice = apply_gate(once, 1, ReversibleGate::not_gate(), w);
        EXPECT_EQ(twice, s);
    }
    // MAJ3 is also an involution (a transposition); Toffoli as well.
    std::vector<std::uint32_t> w3{0, 1, 2};
    for (Word s = 0; s < 8; ++s) {
        for (auto g : {ReversibleGate::maj3(), ReversibleGate::toffoli()}) {
            Word twice = apply_gate(apply_gate(s, 3, g, w3), 3, g, w3);
            EXPECT_EQ(twice, s);
        }
    }
}

TEST(Gate, EveryNamedGateIsBijectiveOnFullState) {
    // Image-set cardinality check over the whole packed state space.
    const std::uint32_t width = 5;
    std::vector<std::pair<ReversibleGate, std::vector<std::uint32_t>>> cases = {
        {ReversibleGate::not_gate(), {3}},
        {ReversibleGate::cnot(), {4, 1}},
        {ReversibleGate::toffoli(), {2, 0, 4}},
        {ReversibleGate::maj3(), {1, 3, 0}},
        {ReversibleGate::or_accumulate(), {0, 2, 4}},
        {ReversibleGate::swap(), {1, 4}},
    };
    for (const auto& [gate, wires] : cases) {
        std::set<Word> image;
        for (Word s = 0; s < (Word{1} << width); ++s)
            image.insert(apply_gate(s, width, gate, wires));
        EXPECT_EQ(image.size(), std::size_t{1} << width) << gate.name();
    }
}

TEST(Gate, ArityAndBoundsErrors) {
    std::vector<std::uint32_t> two{0, 1};
    EXPECT_THROW(apply_gate(0, 3, ReversibleGate::toffoli(), two), std::invalid_argument);
    std::vector<std::uint32_t> oob{0, 1, 5};
    EXPECT_THROW(apply_gate(0, 3, ReversibleGate::toffoli(), oob), std::invalid_argument);
}

TEST(Gate, PermFactoryRejectsBadSizes) {
    EXPECT_THROW(ReversibleGate::perm({0, 1, 2}), std::invalid_argument);
    EXPECT_THROW(ReversibleGate::perm({}), std::invalid_argument);
    auto g = ReversibleGate::perm({0, 2, 1, 3});
    EXPECT_EQ(g.arity, 2u);
    EXPECT_TRUE(g.is_permutation());
}

TEST(Gate, NonBijectiveTableDetected) {
    ReversibleGate g{GateKind::Perm, 2, {3, 1, 3, 0}};
    EXPECT_FALSE(g.is_permutation());
}

TEST(Gate, NameRoundTrips) {
    EXPECT_EQ(ReversibleGate::maj3().name(), "maj3");
    EXPECT_EQ(ReversibleGate::perm({0, 2, 1, 3}).name(), "perm[0,2,1,3]");
}

} // namespace
} // namespace revnoise
