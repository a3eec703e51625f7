#pragma once

// Bitstream encodings used by the CLI.
//   ascii : one '0'/'1' character per bit, a newline after every 64 bits and
//           after the final partial group.
//   packed: bits MSB-first within each byte, final partial byte zero-padded
//           in the low bits.

#include <cctype>
#include <cstdint>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dseq/dsequence.hpp"

namespace dseq {

inline constexpr std::size_t kAsciiLineWidth = 64;

inline std::string to_ascii(std::span<const std::uint8_t> bits) {
    std::string out;
    out.reserve(bits.size() + bits.size() / kAsciiLineWidth + 1);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        out.push_back(bits[i] ? '1' : '0');
        if ((i + 1) % kAsciiLineWidth == 0) out.push_back('\n');
    }
    if (bits.size() % kAsciiLineWidth != 0) out.push_back('\n');
    return out;
}

inline std::vector<std::uint8_t> to_packed(std::span<const std::uint8_t> bits) {
    std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) bytes[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    return bytes;
}

inline Bits from_packed(std::span<const std::uint8_t> bytes, std::size_t bit_count) {
    if (bit_count > bytes.size() * 8)
        throw std::domain_error("from_packed: not enough bytes");
    Bits bits(bit_count);
    for (std::size_t i = 0; i < bit_count; ++i)
        bits[i] = (bytes[i / 8] >> (7 - i % 8)) & 1;
    return bits;
}

// Parses '0'/'1' characters, ignoring whitespace; anything else is an error.
inline Bits from_ascii(std::istream& in) {
    Bits bits;
    char c;
    while (in.get(c)) {
        if (c == '0' || c == '1')
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        else if (!std::isspace(static_cast<unsigned char>(c)))
            throw std::domain_error(std::string("unexpected character '") + c +
                                    "' in bitstream input");
    }
    return bits;
}

inline Bits from_ascii(const std::string& text) {
    Bits bits;
    for (char c : text) {
        if (c == '0' || c == '1')
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        else if (!std::isspace(static_cast<unsigned char>(c)))
            throw std::domain_error(std::string("unexpected character '") + c +
                                    "' in bitstream input");
    }
    return bits;
}

}  // namespace dseq
