#pragma once

#include <cstdint>
#include <cmath>

namespace qugstep {

// splitmix64 finalizer, used to whiten seeds and derive substreams.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic substream id from a master seed and up to two indices.
// Every independent consumer of randomness (a run, a trial, a single
// objective-function evaluation) gets its own stream so results do not
// depend on evaluation order.
constexpr std::uint64_t derive_stream(std::uint64_t master, std::uint64_t a,
                                      std::uint64_t b = 0) {
    return mix64(mix64(master ^ mix64(a)) ^ mix64(b + 0x632be59bd9b4e019ULL));
}

// PCG32 (pcg_xsh_rr_64_32, O'Neill 2014). Chosen over std:: engines because
// the output sequence is fully specified, so traces reproduce bit-for-bit
// across platforms and standard-library versions.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        state_ = 0U;
        inc_ = (stream << 1u) | 1u;
        next_u32();
        state_ += mix64(seed);
        next_u32();
    }

    std::uint32_t next_u32() {
        std::uint64_t old = state_;
        state_ = old * 6364136223846793005ULL + inc_;
        std::uint32_t xorshifted =
            static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
        std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
        return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
    }

    std::uint64_t next_u64() {
        std::uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller. No caching: two uniforms per draw,
    // which keeps the stream position a pure function of the draw count.
    double normal() {
        double u1, u2;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(6.283185307179586476925286766559 * u2);
    }

  private:
    std::uint64_t state_;
    std::uint64_t inc_;
};

}  // namespace qugstep
