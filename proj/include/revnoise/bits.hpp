#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace revnoise {

/// Packed bit-string state. Wire 0 is the most significant bit, so a state's
/// integer value equals the binary number spelled by reading wires 0..N-1
/// left to right (and basis-state indices of width-N distributions /
/// n-qubit density matrices use the same packing).
using Word = std::uint64_t;

inline constexpr std::uint32_t kMaxPackedWidth = 64;

inline Word bit_mask(std::uint32_t width, std::uint32_t wire) {
    return Word{1} << (width - 1 - wire);
}

inline int get_bit(Word state, std::uint32_t width, std::uint32_t wire) {
    return static_cast<int>((state >> (width - 1 - wire)) & 1u);
}

inline Word set_bit(Word state, std::uint32_t width, std::uint32_t wire, int value) {
    Word m = bit_mask(width, wire);
    return value ? (state | m) : (state & ~m);
}

inline Word flip_bit(Word state, std::uint32_t width, std::uint32_t wire) {
    return state ^ bit_mask(width, wire);
}

/// Parses a bit string like "0110"; character i is wire i.
inline Word parse_bits(const std::string& text) {
    if (text.empty() || text.size() > kMaxPackedWidth)
        throw std::invalid_argument("bit string must have 1..64 characters");
    Word state = 0;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("bit string may contain only '0' and '1'");
        state = (state << 1) | static_cast<Word>(c == '1');
    }
    return state;
}

inline std::string format_bits(Word state, std::uint32_t width) {
    std::string out(width, '0');
    for (std::uint32_t w = 0; w < width; ++w)
        if (get_bit(state, width, w)) out[w] = '1';
    return out;
}

} // namespace revnoise
