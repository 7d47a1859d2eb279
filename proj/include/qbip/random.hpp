#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>

namespace qbip {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Seeded stream of 64-bit values (SplitMix64).
///
/// Sub-streams are keyed by a tuple of integers, so per-pixel draws depend only
/// on (seed, key...) and never on traversal order or thread schedule.
class RandomStream {
public:
    using result_type = std::uint64_t;

    explicit constexpr RandomStream(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr RandomStream derive(std::uint64_t seed, std::initializer_list<std::uint64_t> key) noexcept {
        std::uint64_t h = mix64(seed);
        for (auto k : key) h = mix64(h ^ mix64(k + 0x632BE59BD9B4E019ull));
        return RandomStream(h);
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() noexcept {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) from the top 53 bits; portable across standard libraries.
    constexpr double uniform() noexcept {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

}  // namespace qbip
