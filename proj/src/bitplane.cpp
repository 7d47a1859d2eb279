#include "qbip/bitplane.hpp"

#include <string>

namespace qbip {

namespace {

void check_bpp(int bpp) {
    if (bpp < 1 || bpp > 31) throw DomainError("bpp must be in [1, 31], got " + std::to_string(bpp));
}

}  // namespace

Bitplane::Bitplane(std::size_t rows, std::size_t cols, bool fill)
    : bits_(rows, cols, static_cast<std::uint8_t>(fill ? 1 : 0)) {}

Bitplane::Bitplane(std::size_t rows, std::size_t cols, std::vector<std::uint8_t> bits)
    : bits_(rows, cols, std::move(bits)) {
    for (auto b : bits_.data()) {
        if (b > 1) throw DomainError("bitplane element " + std::to_string(b) + " is not 0 or 1");
    }
}

BitplaneStack::BitplaneStack(std::vector<Bitplane> planes) : planes_(std::move(planes)) {
    if (planes_.empty()) throw DomainError("bitplane stack needs at least one plane");
    for (const auto& p : planes_) {
        if (!p.same_shape(planes_.front())) throw ShapeError("bitplanes in a stack must share dimensions");
    }
}

std::vector<std::uint8_t> pixel_to_bits(unsigned p, int bpp) {
    check_bpp(bpp);
    if (p >= (1u << bpp)) {
        throw DomainError("value " + std::to_string(p) + " does not fit in " + std::to_string(bpp) + " bits");
    }
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(bpp));
    for (int i = 0; i < bpp; ++i) {
        bits[static_cast<std::size_t>(i)] = (p >> (bpp - 1 - i)) & 1u;
    }
    return bits;
}

unsigned bits_to_pixel(std::span<const std::uint8_t> bits) {
    check_bpp(static_cast<int>(bits.size()));
    unsigned p = 0;
    for (auto b : bits) {
        if (b > 1) throw DomainError("bit vector element " + std::to_string(b) + " is not 0 or 1");
        p = (p << 1) | b;
    }
    return p;
}

BitplaneStack slice(const GrayImage& ch, int bpp) {
    check_bpp(bpp);
    if (bpp > 8) throw DomainError("8-bit channels support at most 8 bitplanes");
    const unsigned limit = 1u << bpp;
    auto px = ch.data();
    for (auto v : px) {
        if (v >= limit) {
            throw DomainError("pixel " + std::to_string(v) + " does not fit in " + std::to_string(bpp) + " bits");
        }
    }
    std::vector<Bitplane> planes;
    planes.reserve(static_cast<std::size_t>(bpp));
    for (int b = 0; b < bpp; ++b) {
        std::vector<std::uint8_t> bits(px.size());
        for (std::size_t i = 0; i < px.size(); ++i) bits[i] = (px[i] >> b) & 1u;
        planes.emplace_back(ch.rows(), ch.cols(), std::move(bits));
    }
    return BitplaneStack(std::move(planes));
}

GrayImage reassemble(const BitplaneStack& stack) {
    if (stack.bpp() > 8) throw DomainError("cannot reassemble more than 8 bitplanes into 8-bit samples");
    std::vector<std::uint8_t> px(stack.rows() * stack.cols(), 0);
    for (int b = 0; b < stack.bpp(); ++b) {
        auto bits = stack.plane(b).bits();
        for (std::size_t i = 0; i < px.size(); ++i) {
            px[i] = static_cast<std::uint8_t>(px[i] | (bits[i] << b));
        }
    }
    return GrayImage(stack.rows(), stack.cols(), std::move(px));
}

const Bitplane& extract_msb(const BitplaneStack& stack) {
    return stack.plane(stack.bpp() - 1);
}

BitplaneStack replace_plane(const BitplaneStack& stack, int index, Bitplane plane) {
    if (index < 0 || index >= stack.bpp()) {
        throw DomainError("plane index " + std::to_string(index) + " out of range");
    }
    if (plane.rows() != stack.rows() || plane.cols() != stack.cols()) {
        throw ShapeError("replacement plane does not match stack dimensions");
    }
    std::vector<Bitplane> planes(stack.planes().begin(), stack.planes().end());
    planes[static_cast<std::size_t>(index)] = std::move(plane);
    return BitplaneStack(std::move(planes));
}

BitplaneStack replace_msb(const BitplaneStack& stack, Bitplane plane) {
    return replace_plane(stack, stack.bpp() - 1, std::move(plane));
}

Bitplane invert_plane(const Bitplane& p) {
    std::vector<std::uint8_t> bits(p.bits().begin(), p.bits().end());
    for (auto& b : bits) b ^= 1u;
    return Bitplane(p.rows(), p.cols(), std::move(bits));
}

GrayImage render_plane(const Bitplane& p) {
    std::vector<std::uint8_t> px(p.bits().size());
    for (std::size_t i = 0; i < px.size(); ++i) px[i] = p.bits()[i] ? 255 : 0;
    return GrayImage(p.rows(), p.cols(), std::move(px));
}

Bitplane plane_from_rendering(const GrayImage& img) {
    std::vector<std::uint8_t> bits(img.size());
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = img.data()[i] > 127 ? 1 : 0;
    return Bitplane(img.rows(), img.cols(), std::move(bits));
}

}  // namespace qbip
