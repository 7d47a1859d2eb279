#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string_view>
#include <variant>

#include "qbip/grid.hpp"

namespace qbip {

/// One 8-bit intensity channel.
class GrayImage : public Grid<std::uint8_t> {
public:
    using Grid::Grid;
};

enum class Channel { Red = 0, Green = 1, Blue = 2 };

/// Three equally sized 8-bit channels.
class ColorImage {
public:
    ColorImage(GrayImage red, GrayImage green, GrayImage blue);
    ColorImage(std::size_t rows, std::size_t cols, std::uint8_t fill = 0);

    std::size_t rows() const noexcept { return channels_[0].rows(); }
    std::size_t cols() const noexcept { return channels_[0].cols(); }

    const GrayImage& red() const noexcept { return channels_[0]; }
    const GrayImage& green() const noexcept { return channels_[1]; }
    const GrayImage& blue() const noexcept { return channels_[2]; }

    const GrayImage& channel(Channel c) const noexcept { return channels_[static_cast<int>(c)]; }
    const GrayImage& channel(std::size_t i) const { return channels_.at(i); }
    GrayImage& channel(std::size_t i) { return channels_.at(i); }

    friend bool operator==(const ColorImage&, const ColorImage&) = default;

private:
    std::array<GrayImage, 3> channels_;
};

using Image = std::variant<GrayImage, ColorImage>;

/// Reads a binary PGM (P5) or PPM (P6) with maxval 255.
///
/// One comment line directly after the magic number is accepted. P5 yields a
/// GrayImage and P6 a ColorImage with RGB sample order.
Image read_image(const std::filesystem::path& path);

/// Parses an in-memory P5/P6 buffer; same contract as read_image.
Image decode_netpbm(std::string_view bytes);

/// Writes P5 for GrayImage and P6 for ColorImage via a temporary file and rename.
void write_image(const Image& img, const std::filesystem::path& path);

std::string encode_netpbm(const Image& img);

std::array<GrayImage, 3> split_channels(const ColorImage& img);

ColorImage merge_channels(GrayImage red, GrayImage green, GrayImage blue);

/// Atomic text write used for CSV, tables and sidecars.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace qbip
