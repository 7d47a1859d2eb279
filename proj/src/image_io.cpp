#include "qbip/image_io.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>

namespace qbip {

ColorImage::ColorImage(GrayImage red, GrayImage green, GrayImage blue)
    : channels_{std::move(red), std::move(green), std::move(blue)} {
    if (!channels_[0].same_shape(channels_[1]) || !channels_[0].same_shape(channels_[2])) {
        throw ShapeError("color channels must share dimensions");
    }
}

ColorImage::ColorImage(std::size_t rows, std::size_t cols, std::uint8_t fill)
    : channels_{GrayImage(rows, cols, fill), GrayImage(rows, cols, fill),
                GrayImage(rows, cols, fill)} {}

namespace {

class HeaderReader {
public:
    explicit HeaderReader(std::string_view bytes) : bytes_(bytes) {}

    void skip_whitespace() {
        while (pos_ < bytes_.size() && std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
            ++pos_;
        }
    }

    void skip_comment_line() {
        if (pos_ < bytes_.size() && bytes_[pos_] == '#') {
            while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
        }
    }

    std::size_t read_number(const char* field) {
        skip_whitespace();
        std::size_t start = pos_;
        std::size_t value = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            value = value * 10 + static_cast<std::size_t>(bytes_[pos_] - '0');
            if (value > (1u << 30)) throw FormatError(std::string("header ") + field + " too large");
            ++pos_;
        }
        if (pos_ == start) throw FormatError(std::string("missing header field: ") + field);
        return value;
    }

    // Exactly one whitespace byte separates maxval from the raster.
    void expect_single_whitespace() {
        if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
            throw FormatError("missing whitespace after maxval");
        }
        ++pos_;
    }

    std::size_t pos() const noexcept { return pos_; }
    void advance(std::size_t n) { pos_ += n; }

private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

std::string read_all(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed: " + path.string());
    return bytes;
}

void write_atomic(const std::filesystem::path& path, std::string_view bytes) {
    std::random_device rd;
    auto tmp = path;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open for writing: " + path.string());
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw IoError("write failed: " + path.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot rename into place: " + path.string());
    }
}

}  // namespace

Image decode_netpbm(std::string_view bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6')) {
        throw FormatError("unsupported magic number (expected P5 or P6)");
    }
    const bool color = bytes[1] == '6';

    HeaderReader header(bytes);
    header.advance(2);
    header.skip_whitespace();
    header.skip_comment_line();
    const std::size_t cols = header.read_number("width");
    const std::size_t rows = header.read_number("height");
    const std::size_t maxval = header.read_number("maxval");
    if (cols == 0 || rows == 0) throw FormatError("image dimensions must be positive");
    if (maxval != 255) {
        throw UnsupportedDepthError("maxval " + std::to_string(maxval) + " not supported (need 255)");
    }
    header.expect_single_whitespace();

    const std::size_t channels = color ? 3 : 1;
    const std::size_t payload = rows * cols * channels;
    if (bytes.size() - header.pos() < payload) {
        throw IoError("truncated raster: expected " + std::to_string(payload) + " bytes, got " +
                      std::to_string(bytes.size() - header.pos()));
    }
    const auto* raster = reinterpret_cast<const std::uint8_t*>(bytes.data() + header.pos());

    if (!color) {
        return GrayImage(rows, cols, std::vector<std::uint8_t>(raster, raster + payload));
    }
    std::array<std::vector<std::uint8_t>, 3> planes;
    for (auto& p : planes) p.resize(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        planes[0][i] = raster[3 * i];
        planes[1][i] = raster[3 * i + 1];
        planes[2][i] = raster[3 * i + 2];
    }
    return ColorImage(GrayImage(rows, cols, std::move(planes[0])),
                      GrayImage(rows, cols, std::move(planes[1])),
                      GrayImage(rows, cols, std::move(planes[2])));
}

Image read_image(const std::filesystem::path& path) {
    return decode_netpbm(read_all(path));
}

std::string encode_netpbm(const Image& img) {
    std::ostringstream out;
    if (const auto* gray = std::get_if<GrayImage>(&img)) {
        out << "P5\n" << gray->cols() << ' ' << gray->rows() << "\n255\n";
        auto px = gray->data();
        out.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
        return out.str();
    }
    const auto& rgb = std::get<ColorImage>(img);
    out << "P6\n" << rgb.cols() << ' ' << rgb.rows() << "\n255\n";
    std::string raster(rgb.rows() * rgb.cols() * 3, '\0');
    auto r = rgb.red().data();
    auto g = rgb.green().data();
    auto b = rgb.blue().data();
    for (std::size_t i = 0; i < r.size(); ++i) {
        raster[3 * i] = static_cast<char>(r[i]);
        raster[3 * i + 1] = static_cast<char>(g[i]);
        raster[3 * i + 2] = static_cast<char>(b[i]);
    }
    out << raster;
    return out.str();
}

void write_image(const Image& img, const std::filesystem::path& path) {
    write_atomic(path, encode_netpbm(img));
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    write_atomic(path, text);
}

std::array<GrayImage, 3> split_channels(const ColorImage& img) {
    return {img.red(), img.green(), img.blue()};
}

ColorImage merge_channels(GrayImage red, GrayImage green, GrayImage blue) {
    return ColorImage(std::move(red), std::move(green), std::move(blue));
}

}  // namespace qbip
