#include "catch_amalgamated.hpp"

#include "gsc/bitvec.hpp"
#include "gsc/rng.hpp"

using gsc::BitVec;

TEST_CASE("set/get round trip over word boundaries", "[bitvec]") {
    BitVec v(131);
    REQUIRE(v.size() == 131);
    for (size_t i = 0; i < v.size(); i += 3) v.set(i, true);
    for (size_t i = 0; i < v.size(); ++i) REQUIRE(v.get(i) == (i % 3 == 0));
    REQUIRE(v.count() == 44);
    v.set(0, false);
    REQUIRE_FALSE(v.get(0));
    REQUIRE(v.count() == 43);
}

TEST_CASE("string conversion round trips", "[bitvec]") {
    gsc::SplitMix64 rng(7);
    for (int t = 0; t < 200; ++t) {
        size_t len = rng.next() % 200;
        std::string s(len, '0');
        for (auto& c : s)
            if (rng.bernoulli(0.5)) c = '1';
        BitVec v = BitVec::from_string(s);
        REQUIRE(v.to_string() == s);
        REQUIRE(BitVec::from_string(v.to_string()) == v);
    }
    REQUIRE_THROWS_AS(BitVec::from_string("01x"), std::invalid_argument);
}

TEST_CASE("comparison matches lexicographic string order", "[bitvec]") {
    gsc::SplitMix64 rng(11);
    for (int t = 0; t < 500; ++t) {
        size_t len = 1 + rng.next() % 130;
        std::string a(len, '0'), b(len, '0');
        for (auto& c : a)
            if (rng.bernoulli(0.5)) c = '1';
        for (auto& c : b)
            if (rng.bernoulli(0.5)) c = '1';
        BitVec va = BitVec::from_string(a), vb = BitVec::from_string(b);
        REQUIRE((va < vb) == (a < b));
        REQUIRE((va == vb) == (a == b));
    }
}

TEST_CASE("flip_all complements every bit and keeps padding clean", "[bitvec]") {
    BitVec v(70);
    v.set(0, true);
    v.set(69, true);
    v.flip_all();
    REQUIRE(v.count() == 68);
    REQUIRE_FALSE(v.get(0));
    REQUIRE(v.get(1));
    REQUIRE_FALSE(v.get(69));
    v.flip_all();
    REQUIRE(v.count() == 2);
}

TEST_CASE("byte packing is MSB first with zero padding", "[bitvec]") {
    BitVec v = BitVec::from_string("10000001");
    auto bytes = v.to_bytes();
    REQUIRE(bytes.size() == 1);
    REQUIRE(bytes[0] == 0x81);

    BitVec w = BitVec::from_string("101");
    auto wb = w.to_bytes();
    REQUIRE(wb.size() == 1);
    REQUIRE(wb[0] == 0xA0);

    gsc::SplitMix64 rng(13);
    for (int t = 0; t < 100; ++t) {
        size_t len = rng.next() % 150;
        BitVec x(len);
        for (size_t i = 0; i < len; ++i) x.set(i, rng.bernoulli(0.4));
        auto packed = x.to_bytes();
        REQUIRE(BitVec::from_bytes(packed.data(), len) == x);
    }
}
