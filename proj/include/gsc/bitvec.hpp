#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsc {

// Fixed-length bit vector. Bit i of the sequence is stored at bit (63 - i%64)
// of word i/64, so comparing the word arrays as unsigned integers is exactly
// lexicographic order on the bit sequence. Tail bits past size() are kept zero.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(size_t nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    size_t size() const { return nbits_; }

    bool get(size_t i) const { return (w_[i >> 6] >> (63 - (i & 63))) & 1u; }

    void set(size_t i, bool v) {
        uint64_t mask = 1ull << (63 - (i & 63));
        if (v)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }

    size_t count() const {
        size_t c = 0;
        for (uint64_t w : w_) c += static_cast<size_t>(std::popcount(w));
        return c;
    }

    void flip_all() {
        for (auto& w : w_) w = ~w;
        clear_tail();
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.nbits_ == b.nbits_ && a.w_ == b.w_;
    }
    friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
        size_t k = a.w_.size() < b.w_.size() ? a.w_.size() : b.w_.size();
        for (size_t i = 0; i < k; ++i)
            if (a.w_[i] != b.w_[i]) return a.w_[i] <=> b.w_[i];
        return a.nbits_ <=> b.nbits_;
    }

    std::string to_string() const {
        std::string s(nbits_, '0');
        for (size_t i = 0; i < nbits_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    static BitVec from_string(const std::string& s) {
        BitVec b(s.size());
        for (size_t i = 0; i < s.size(); ++i) {
            if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("BitVec: not a bit string");
            if (s[i] == '1') b.set(i, true);
        }
        return b;
    }

    // MSB-first byte packing; final partial byte zero-padded.
    std::vector<uint8_t> to_bytes() const {
        std::vector<uint8_t> out((nbits_ + 7) / 8, 0);
        for (size_t i = 0; i < nbits_; ++i)
            if (get(i)) out[i >> 3] |= static_cast<uint8_t>(0x80u >> (i & 7));
        return out;
    }

    static BitVec from_bytes(const uint8_t* data, size_t nbits) {
        BitVec b(nbits);
        for (size_t i = 0; i < nbits; ++i)
            if (data[i >> 3] & (0x80u >> (i & 7))) b.set(i, true);
        return b;
    }

    const std::vector<uint64_t>& words() const { return w_; }

private:
    void clear_tail() {
        size_t used = nbits_ & 63;
        if (!w_.empty() && used) w_.back() &= ~0ull << (64 - used);
    }

    size_t nbits_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace gsc
