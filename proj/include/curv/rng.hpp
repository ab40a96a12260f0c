/**
 * Seeded random number generation with bit-reproducible derived values.
 *
 * std::uniform_real_distribution and friends are implementation-defined,
 * so the conversions from raw engine output to doubles / bounded ints are
 * done by hand here.  Given the same seed, every draw is identical across
 * toolchains.
 */

#ifndef CURV_RNG_HPP
#define CURV_RNG_HPP

#include <cstdint>
#include <random>

namespace curv {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53 random bits.
    double u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound), bound >= 1, by rejection.
    std::uint64_t below(std::uint64_t bound)
    {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    int uniform_int(int lo, int hi) // inclusive range
    {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool bernoulli(double p) { return u01() < p; }

private:
    std::mt19937_64 engine_;
};

} // namespace curv

#endif
