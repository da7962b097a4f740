#pragma once

#include <cstdint>

namespace koszul {

// SplitMix64 stream. Pinned algorithm so that instance streams are
// reproducible across platforms and releases (std:: distributions are not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64()
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n), n>0, by 128-bit multiply-shift with rejection
    std::uint64_t below(std::uint64_t n)
    {
        for (;;) {
            std::uint64_t x = next_u64();
            __uint128_t m = (__uint128_t)x * n;
            std::uint64_t lo = (std::uint64_t)m;
            if (lo >= (-n) % n || n == 1) return (std::uint64_t)(m >> 64);
        }
    }

    int range_int(int lo, int hi) // inclusive bounds
    {
        return lo + (int)below((std::uint64_t)(hi - lo + 1));
    }

    bool chance(double prob) { return (double)next_u64() / 18446744073709551616.0 < prob; }

    // sub-stream for trial k of a seeded run; decorrelates trials so they can
    // be executed in any order
    static Rng for_trial(std::uint64_t seed, std::uint64_t trial)
    {
        Rng mix(seed ^ (0xa0761d6478bd642fULL * (trial + 1)));
        mix.next_u64();
        return mix;
    }

private:
    std::uint64_t state_;
};

} // namespace koszul
