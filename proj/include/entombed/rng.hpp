#pragma once

#include <cstdint>

namespace entombed {

// splitmix64 (Vigna's fixed-increment SplittableRandom variant).
// Chosen because it is trivially portable: the same seed yields the same
// word sequence on every platform, which keeps generated mazes
// bit-reproducible across implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        ++words_drawn_;
        return z ^ (z >> 31);
    }

    // One decision bit: the lowest-order bit of the next word. Every random
    // choice in this library consumes exactly one word.
    std::uint8_t next_bit() { return static_cast<std::uint8_t>(next() & 1u); }

    std::uint64_t words_drawn() const { return words_drawn_; }

private:
    std::uint64_t state_;
    std::uint64_t words_drawn_ = 0;
};

} // namespace entombed
