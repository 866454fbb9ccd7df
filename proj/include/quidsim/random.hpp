#pragma once

#include <cstdint>

namespace quidsim {

/// Deterministic pseudo-random source with cheap independent substreams.
///
/// This is SplitMix64 run in counter mode: output i of a stream is
/// finalize(seed + i * golden_gamma), a pure function of (seed, i). Two
/// consequences matter here. First, results are bit-identical across
/// platforms and compilers, which the standard library distributions do not
/// guarantee. Second, substream(k) derives a child seed from (seed, k)
/// alone, so per-shot streams are independent of how much of the parent
/// stream has been consumed, and shot k can be replayed in isolation.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return finalize(seed_ + ++counter_ * kGamma); }

    /// Uniform double in [0, 1) built from the top 53 bits of next_u64().
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Generator for child stream `index`, decorrelated from this stream and
    /// from other indices. Does not advance this stream.
    RandomSource substream(std::uint64_t index) const {
        return RandomSource(finalize(finalize(seed_ ^ kStreamSalt) + (index + 1) * kStreamGamma));
    }

  private:
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
    static constexpr std::uint64_t kStreamSalt = 0x5851f42d4c957f2dULL;
    static constexpr std::uint64_t kStreamGamma = 0xd1342543de82ef95ULL;

    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

} // namespace quidsim
