#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gsc/bitvec.hpp"
#include "gsc/tscode.hpp"

namespace gsc {

// Versioned binary codebook image. Layout (all integers big-endian):
//   "GSCB" | u32 version | u8 n | u64 total | u64 ordering checksum
//   per ordered class: u8 j | u64 count | count x (packed canon | u64 labelings)
// Loading validates every header field against the expected ordering and
// returns nothing on any disagreement, leaving the caller to rebuild.

inline constexpr uint32_t kCodebookFormatVersion = 1;

namespace detail {

inline void put_u32(std::string& out, uint32_t v) {
    for (int k = 3; k >= 0; --k) out.push_back(static_cast<char>((v >> (8 * k)) & 0xFF));
}

inline void put_u64(std::string& out, uint64_t v) {
    for (int k = 7; k >= 0; --k) out.push_back(static_cast<char>((v >> (8 * k)) & 0xFF));
}

struct ByteReader {
    std::string_view data;
    size_t pos = 0;
    bool ok = true;

    uint8_t u8() {
        if (pos + 1 > data.size()) return ok = false, 0;
        return static_cast<uint8_t>(data[pos++]);
    }
    uint32_t u32() {
        uint32_t v = 0;
        for (int k = 0; k < 4; ++k) v = (v << 8) | u8();
        return v;
    }
    uint64_t u64() {
        uint64_t v = 0;
        for (int k = 0; k < 8; ++k) v = (v << 8) | u8();
        return v;
    }
    std::string_view bytes(size_t count) {
        if (pos + count > data.size()) return ok = false, std::string_view{};
        std::string_view v = data.substr(pos, count);
        pos += count;
        return v;
    }
};

}  // namespace detail

inline std::string serialize_codebook(const Codebook& cb) {
    std::string out = "GSCB";
    detail::put_u32(out, kCodebookFormatVersion);
    out.push_back(static_cast<char>(cb.n));
    detail::put_u64(out, static_cast<uint64_t>(cb.ordering.total));
    detail::put_u64(out, ordering_checksum(cb.ordering));
    for (size_t k = 0; k < cb.classes.size(); ++k) {
        out.push_back(static_cast<char>(cb.ordering.entries[k].j));
        detail::put_u64(out, cb.classes[k].size());
        for (size_t r = 0; r < cb.classes[k].size(); ++r) {
            for (uint8_t byte : cb.classes[k][r].to_bytes()) out.push_back(static_cast<char>(byte));
            detail::put_u64(out, cb.labelings[k][r]);
        }
    }
    return out;
}

inline std::optional<Codebook> deserialize_codebook(std::string_view data,
                                                    const ClassOrdering& expect) {
    detail::ByteReader rd{data};
    if (rd.bytes(4) != "GSCB") return std::nullopt;
    if (rd.u32() != kCodebookFormatVersion) return std::nullopt;
    int n = rd.u8();
    if (!rd.ok || n != expect.n) return std::nullopt;
    if (BigInt(rd.u64()) != expect.total) return std::nullopt;
    if (rd.u64() != ordering_checksum(expect)) return std::nullopt;

    uint64_t m = num_pairs(n);
    size_t canon_bytes = (m + 7) / 8;
    Codebook cb;
    cb.n = n;
    cb.ordering = expect;
    cb.classes.resize(expect.entries.size());
    cb.labelings.resize(expect.entries.size());
    for (size_t k = 0; k < expect.entries.size(); ++k) {
        if (rd.u8() != static_cast<uint8_t>(expect.entries[k].j)) return std::nullopt;
        uint64_t count = rd.u64();
        if (!rd.ok || BigInt(count) != expect.entries[k].size) return std::nullopt;
        cb.classes[k].reserve(count);
        cb.labelings[k].reserve(count);
        for (uint64_t r = 0; r < count; ++r) {
            std::string_view raw = rd.bytes(canon_bytes);
            uint64_t lab = rd.u64();
            if (!rd.ok) return std::nullopt;
            BitVec canon =
                BitVec::from_bytes(reinterpret_cast<const uint8_t*>(raw.data()), m);
            if (r > 0 && !(cb.classes[k].back() < canon)) return std::nullopt;
            if (canon.count() != static_cast<uint64_t>(expect.entries[k].j)) return std::nullopt;
            if (lab == 0) return std::nullopt;
            cb.classes[k].push_back(std::move(canon));
            cb.labelings[k].push_back(lab);
        }
    }
    if (rd.pos != data.size()) return std::nullopt;
    return cb;
}

}  // namespace gsc
