#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

#include "gsc/errors.hpp"

namespace gsc {

// The one-to-one enumeration of {0,1}* = {"", "0", "1", "00", ...}:
// index i maps to the binary expansion of i+1 with the leading 1 removed.

inline int codeword_length(uint64_t index) {
    if (index == UINT64_MAX) throw CapacityError("codeword_length: index overflow");
    return std::bit_width(index + 1) - 1;
}

inline std::string index_to_codeword(uint64_t index) {
    int len = codeword_length(index);
    uint64_t v = index + 1;
    std::string bits(len, '0');
    for (int k = 0; k < len; ++k)
        if ((v >> (len - 1 - k)) & 1) bits[k] = '1';
    return bits;
}

inline uint64_t codeword_to_index(std::string_view bits) {
    if (bits.size() > 63) throw CapacityError("codeword_to_index: codeword longer than 63 bits");
    uint64_t v = 1;
    for (size_t k = 0; k < bits.size(); ++k) {
        char c = bits[k];
        if (c != '0' && c != '1')
            throw ParseError("codeword: invalid character (expected '0' or '1')", k);
        v = (v << 1) | static_cast<uint64_t>(c - '0');
    }
    return v - 1;
}

// Binary record form of a codeword: varint bit count (LEB128), then the bits
// packed MSB-first into ceil(len/8) bytes, zero padded.

inline void append_codeword_record(std::string& out, std::string_view bits) {
    uint64_t len = bits.size();
    do {
        uint8_t byte = len & 0x7F;
        len >>= 7;
        if (len != 0) byte |= 0x80;
        out.push_back(static_cast<char>(byte));
    } while (len != 0);
    uint8_t cur = 0;
    for (size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] == '1') cur |= static_cast<uint8_t>(0x80u >> (k & 7));
        if ((k & 7) == 7) {
            out.push_back(static_cast<char>(cur));
            cur = 0;
        }
    }
    if (bits.size() & 7) out.push_back(static_cast<char>(cur));
}

// Reads one record starting at `pos`, advances `pos` past it.
inline std::string read_codeword_record(std::string_view data, size_t& pos) {
    uint64_t len = 0;
    int shift = 0;
    while (true) {
        if (pos >= data.size()) throw ParseError("codeword record: truncated length", pos);
        uint8_t byte = static_cast<uint8_t>(data[pos++]);
        if (shift >= 63 && byte > 1)
            throw ParseError("codeword record: length varint overflow", pos - 1);
        len |= static_cast<uint64_t>(byte & 0x7F) << shift;
        if (!(byte & 0x80)) break;
        shift += 7;
    }
    uint64_t nbytes = (len + 7) / 8;
    if (data.size() - pos < nbytes)
        throw ParseError("codeword record: truncated payload", data.size());
    std::string bits(len, '0');
    for (uint64_t k = 0; k < len; ++k) {
        uint8_t byte = static_cast<uint8_t>(data[pos + k / 8]);
        if ((byte >> (7 - (k & 7))) & 1) bits[k] = '1';
    }
    for (uint64_t k = len; k < nbytes * 8; ++k) {
        uint8_t byte = static_cast<uint8_t>(data[pos + k / 8]);
        if ((byte >> (7 - (k & 7))) & 1)
            throw ParseError("codeword record: nonzero padding", pos + k / 8);
    }
    pos += nbytes;
    return bits;
}

}  // namespace gsc
