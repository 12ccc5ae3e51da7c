/**
 * Deterministic, platform-portable random number generation.
 *
 * xoshiro256** seeded through splitmix64 (Blackman & Vigna's public-domain
 * generators). Substreams are keyed by (seed, stream index) so independent
 * walks or initializations draw from disjoint, reproducible sequences
 * regardless of execution order.
 */

#pragma once

#include <cstdint>

namespace grwscmf {

/// splitmix64; used for seeding and for deriving sub-seeds.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t state_;
};

class Xoshiro256ss {
  public:
    explicit Xoshiro256ss(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
    }

    /// Generator for substream `stream` of master `seed`.
    static Xoshiro256ss substream(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 sm(seed);
        std::uint64_t base = sm.next();
        return Xoshiro256ss(base ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

}  // namespace grwscmf
