#include <catch2/catch_amalgamated.hpp>

#include "entombed/rng.hpp"

using entombed::SplitMix64;

TEST_CASE("splitmix64 matches the reference sequence") {
    // Reference values from Vigna's splitmix64.c.
    SplitMix64 rng0(0);
    CHECK(rng0.next() == 0xe220a8397b1dcdafull);
    CHECK(rng0.next() == 0x6e789e6aa1b965f4ull);
    CHECK(rng0.next() == 0x06c45d188009454full);
    CHECK(rng0.next() == 0xf88bb8a8724c81ecull);

    SplitMix64 rng1(1);
    CHECK(rng1.next() == 0x910a2dec89025cc1ull);
    CHECK(rng1.next() == 0xbeeb8da1658eec67ull);

    SplitMix64 rng42(42);
    CHECK(rng42.next() == 0xbdd732262feb6e95ull);
}

TEST_CASE("identical seeds give identical bit streams") {
    SplitMix64 a(0xdeadbeefcafef00dull);
    SplitMix64 b(0xdeadbeefcafef00dull);
    for (int k = 0; k < 1000; ++k) REQUIRE(a.next_bit() == b.next_bit());
}

TEST_CASE("next_bit is the low bit of the next word") {
    SplitMix64 a(7), b(7);
    for (int k = 0; k < 64; ++k) CHECK(a.next_bit() == (b.next() & 1u));
}

TEST_CASE("words_drawn counts every draw") {
    SplitMix64 rng(3);
    CHECK(rng.words_drawn() == 0);
    rng.next();
    rng.next_bit();
    rng.next_bit();
    CHECK(rng.words_drawn() == 3);
}
