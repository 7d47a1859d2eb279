#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qbip/grid.hpp"
#include "qbip/image_io.hpp"

namespace qbip {

inline constexpr int kDefaultBpp = 8;

/// Binary matrix holding one bit position of one channel. Every element is 0 or 1.
class Bitplane {
public:
    Bitplane(std::size_t rows, std::size_t cols, bool fill = false);
    /// Throws DomainError if any element is not 0 or 1.
    Bitplane(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> bits);

    std::size_t rows() const noexcept { return bits_.rows(); }
    std::size_t cols() const noexcept { return bits_.cols(); }

    std::uint8_t operator()(std::size_t r, std::size_t c) const { return bits_(r, c); }
    void set(std::size_t r, std::size_t c, bool v) { bits_(r, c) = v ? 1 : 0; }

    std::span<const std::uint8_t> bits() const noexcept { return bits_.data(); }
    bool same_shape(const Bitplane& o) const noexcept { return bits_.same_shape(o.bits_); }

    friend bool operator==(const Bitplane&, const Bitplane&) = default;

private:
    Grid<std::uint8_t> bits_;
};

/// The `bpp` bitplanes of one channel; index 0 is the LSB, index bpp-1 the MSB.
class BitplaneStack {
public:
    explicit BitplaneStack(std::vector<Bitplane> planes);

    int bpp() const noexcept { return static_cast<int>(planes_.size()); }
    std::size_t rows() const noexcept { return planes_.front().rows(); }
    std::size_t cols() const noexcept { return planes_.front().cols(); }

    const Bitplane& plane(int index) const { return planes_.at(static_cast<std::size_t>(index)); }
    std::span<const Bitplane> planes() const noexcept { return planes_; }

    friend bool operator==(const BitplaneStack&, const BitplaneStack&) = default;

private:
    std::vector<Bitplane> planes_;
};

/// MSB-first binary expansion of `p` with `bpp` digits.
std::vector<std::uint8_t> pixel_to_bits(unsigned p, int bpp = kDefaultBpp);

/// Inverse of pixel_to_bits; `bits` is MSB-first.
unsigned bits_to_pixel(std::span<const std::uint8_t> bits);

BitplaneStack slice(const GrayImage& ch, int bpp = kDefaultBpp);

/// Rebuilds the channel. Requires bpp <= 8.
GrayImage reassemble(const BitplaneStack& stack);

const Bitplane& extract_msb(const BitplaneStack& stack);
const Bitplane& extract_msb(BitplaneStack&&) = delete;

BitplaneStack replace_msb(const BitplaneStack& stack, Bitplane plane);

/// Replaces an arbitrary plane; replace_msb is the pipeline case.
BitplaneStack replace_plane(const BitplaneStack& stack, int index, Bitplane plane);

Bitplane invert_plane(const Bitplane& p);

/// Visual rendering: 0 -> 0, 1 -> 255.
GrayImage render_plane(const Bitplane& p);

/// Inverse of render_plane: samples above 127 become 1.
Bitplane plane_from_rendering(const GrayImage& img);

}  // namespace qbip
