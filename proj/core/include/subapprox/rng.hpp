#pragma once

#include <cstdint>
#include <random>

namespace subapprox {

/// SplitMix64 finaliser; used to derive independent sub-seeds.
[[nodiscard]] std::uint64_t splitmix64(std::uint64_t x);

/// Seedable, splittable random stream.
///
/// Each stream wraps a 64-bit Mersenne Twister seeded from its own key.
/// split(k) derives the key of child stream k from the parent key only, so a
/// family of children is fixed by (seed, k) regardless of how many values
/// the parent has drawn or which thread consumes them.
class StreamRng {
public:
    explicit StreamRng(std::uint64_t seed);

    [[nodiscard]] StreamRng split(std::uint64_t stream) const;
    [[nodiscard]] std::uint64_t key() const { return key_; }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();
    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t next() { return engine_(); }

private:
    std::uint64_t key_;
    std::mt19937_64 engine_;
};

}  // namespace subapprox
