#pragma once

#include <cstdint>

#include "qbip/image_io.hpp"

namespace qbip {

inline constexpr std::uint64_t kDefaultSeed = 20240605;

struct NoiseSpec {
    double density = 0.05;
    std::uint64_t seed = kDefaultSeed;
    /// Corrupt all channels of a pixel together with one shared draw.
    bool couple_channels = false;

    static constexpr std::uint8_t kSalt = 255;
    static constexpr std::uint8_t kPepper = 0;
};

/// Salt-and-pepper impulse noise. Each sample becomes 0 with probability d/2,
/// 255 with probability d/2, otherwise stays. The draw for (channel, r, c)
/// comes from its own sub-stream, so `threads` never changes the output.
GrayImage salt_pepper(const GrayImage& img, const NoiseSpec& spec, unsigned threads = 1);
ColorImage salt_pepper(const ColorImage& img, const NoiseSpec& spec, unsigned threads = 1);
Image salt_pepper(const Image& img, const NoiseSpec& spec, unsigned threads = 1);

}  // namespace qbip
