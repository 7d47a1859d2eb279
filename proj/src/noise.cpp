#include "qbip/noise.hpp"

#include <algorithm>
#include <string>
#include <thread>
#include <vector>

#include "qbip/random.hpp"

namespace qbip {

namespace {

void check_spec(const NoiseSpec& spec) {
    if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
        throw DomainError("noise density must lie in [0, 1], got " + std::to_string(spec.density));
    }
}

template <typename RowFn>
void for_rows(std::size_t rows, unsigned threads, RowFn&& fn) {
    threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(rows));
    if (threads == 1) {
        for (std::size_t r = 0; r < rows; ++r) fn(r);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t r = t; r < rows; r += threads) fn(r);
        });
    }
}

// Draw for one (stream key, r, c): returns the impulse value, or -1 to keep.
int impulse(const NoiseSpec& spec, std::uint64_t key, std::size_t r, std::size_t c) {
    auto rng = RandomStream::derive(spec.seed, {key, r, c});
    const double u = rng.uniform();
    if (u < spec.density / 2.0) return NoiseSpec::kPepper;
    if (u < spec.density) return NoiseSpec::kSalt;
    return -1;
}

constexpr std::uint64_t kCoupledKey = 0xC0;

}  // namespace

GrayImage salt_pepper(const GrayImage& img, const NoiseSpec& spec, unsigned threads) {
    check_spec(spec);
    GrayImage out = img;
    const std::uint64_t key = spec.couple_channels ? kCoupledKey : 0;
    for_rows(img.rows(), threads, [&](std::size_t r) {
        for (std::size_t c = 0; c < img.cols(); ++c) {
            if (int v = impulse(spec, key, r, c); v >= 0) out(r, c) = static_cast<std::uint8_t>(v);
        }
    });
    return out;
}

ColorImage salt_pepper(const ColorImage& img, const NoiseSpec& spec, unsigned threads) {
    check_spec(spec);
    ColorImage out = img;
    for_rows(img.rows(), threads, [&](std::size_t r) {
        for (std::size_t c = 0; c < img.cols(); ++c) {
            for (std::size_t ch = 0; ch < 3; ++ch) {
                const std::uint64_t key = spec.couple_channels ? kCoupledKey : ch;
                if (int v = impulse(spec, key, r, c); v >= 0) {
                    out.channel(ch)(r, c) = static_cast<std::uint8_t>(v);
                }
            }
        }
    });
    return out;
}

Image salt_pepper(const Image& img, const NoiseSpec& spec, unsigned threads) {
    return std::visit([&](const auto& x) -> Image { return salt_pepper(x, spec, threads); }, img);
}

}  // namespace qbip
