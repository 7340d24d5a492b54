#pragma once

#include <string>
#include <string_view>

#include "gsc/errors.hpp"
#include "gsc/graphs.hpp"

namespace gsc {

// graph6 interchange format, short form (n <= 62). Bit order inside the data
// bytes is column-major over the upper triangle: (0,1),(0,2),(1,2),(0,3),...
// Data bits are padded with zeros to a multiple of six; each 6-bit group is
// stored as one printable byte, value + 63.

inline std::string write_graph6(const LabeledGraph& g) {
    if (g.n > 62) throw CapacityError("write_graph6: only the short form (n <= 62) is supported");
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    uint64_t m = num_pairs(g.n);
    uint64_t nbytes = (m + 5) / 6;
    uint64_t b = 0;
    for (uint64_t byte = 0; byte < nbytes; ++byte) {
        int group = 0;
        for (int k = 5; k >= 0; --k, ++b) {
            if (b < m) {
                // column-major bit b corresponds to pair (u, v): v grows outer
                uint64_t rem = b, v = 1;
                while (rem >= v) rem -= v, ++v;
                if (g.has_edge(static_cast<int>(rem), static_cast<int>(v))) group |= 1 << k;
            }
        }
        out.push_back(static_cast<char>(group + 63));
    }
    return out;
}

inline LabeledGraph parse_graph6(std::string_view text) {
    static constexpr std::string_view kHeader = ">>graph6<<";
    size_t base = 0;
    if (text.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
    if (base >= text.size()) throw ParseError("graph6: empty input", base);

    unsigned char c0 = static_cast<unsigned char>(text[base]);
    if (c0 == 126)
        throw ParseError("graph6: extended size form (n > 62) not supported", base);
    if (c0 < 63 || c0 > 125)
        throw ParseError("graph6: invalid size byte", base);
    int n = c0 - 63;
    if (n == 0) throw ParseError("graph6: zero-vertex graph not representable here", base);

    uint64_t m = num_pairs(n);
    uint64_t nbytes = (m + 5) / 6;
    if (text.size() - base - 1 < nbytes)
        throw ParseError("graph6: truncated data (" + std::to_string(nbytes) + " data bytes expected)",
                         text.size());
    if (text.size() - base - 1 > nbytes)
        throw ParseError("graph6: trailing bytes after graph data", base + 1 + nbytes);

    LabeledGraph g(n);
    uint64_t b = 0;
    for (uint64_t byte = 0; byte < nbytes; ++byte) {
        unsigned char c = static_cast<unsigned char>(text[base + 1 + byte]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: invalid data byte", base + 1 + byte);
        int group = c - 63;
        for (int k = 5; k >= 0; --k, ++b) {
            bool bit = (group >> k) & 1;
            if (b < m) {
                uint64_t rem = b, v = 1;
                while (rem >= v) rem -= v, ++v;
                if (bit) g.set_edge(static_cast<int>(rem), static_cast<int>(v), true);
            } else if (bit) {
                throw ParseError("graph6: nonzero padding bit", base + 1 + byte);
            }
        }
    }
    return g;
}

}  // namespace gsc
