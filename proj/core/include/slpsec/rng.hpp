#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace slpsec {

/// SplitMix64 step; also used to derive independent substream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Substream key for (seed, stream, index). All per-frame randomness in the
/// simulator is keyed through this so trials replay bit-exactly and can be
/// processed in any order.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream,
                                   std::uint64_t index) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s ^= 0x6a09e667f3bcc909ULL + stream;
    std::uint64_t b = splitmix64(s);
    s ^= 0xbb67ae8584caa73bULL + index;
    std::uint64_t c = splitmix64(s);
    return a ^ (b * 0x9e3779b97f4a7c15ULL) ^ c;
}

/// xoshiro256++ generator, seeded through SplitMix64. Portable: the output
/// sequence is a pure function of the 64-bit seed on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0,1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// N(0,1) via Box-Muller. Consumes exactly two uniforms per call.
    double gaussian() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Circularly symmetric CN(0,1): real and imaginary parts N(0, 1/2).
    std::complex<double> cgaussian() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        const double r = std::sqrt(-std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        return {r * std::cos(a), r * std::sin(a)};
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

}  // namespace slpsec
