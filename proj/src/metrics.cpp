#include "qbip/metrics.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <span>
#include <sstream>
#include <vector>

namespace qbip {

namespace {

struct ErrorSums {
    std::uint64_t abs_sum = 0;
    std::uint64_t sq_sum = 0;
    std::size_t samples = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    int channels = 1;
};

void accumulate(ErrorSums& s, std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::int64_t d = static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]);
        s.abs_sum += static_cast<std::uint64_t>(std::llabs(d));
        s.sq_sum += static_cast<std::uint64_t>(d * d);
    }
    s.samples += a.size();
}

// Integer accumulation keeps results independent of summation order.
ErrorSums error_sums(const Image& a, const Image& b) {
    if (a.index() != b.index()) throw ShapeError("cannot compare a grayscale image with a color image");
    ErrorSums s;
    if (const auto* ga = std::get_if<GrayImage>(&a)) {
        const auto& gb = std::get<GrayImage>(b);
        if (!ga->same_shape(gb)) throw ShapeError("image dimensions differ");
        accumulate(s, ga->data(), gb.data());
        s.rows = ga->rows();
        s.cols = ga->cols();
        return s;
    }
    const auto& ca = std::get<ColorImage>(a);
    const auto& cb = std::get<ColorImage>(b);
    if (ca.rows() != cb.rows() || ca.cols() != cb.cols()) throw ShapeError("image dimensions differ");
    for (std::size_t ch = 0; ch < 3; ++ch) accumulate(s, ca.channel(ch).data(), cb.channel(ch).data());
    s.rows = ca.rows();
    s.cols = ca.cols();
    s.channels = 3;
    return s;
}

double peak_for(int bits_per_sample) {
    if (bits_per_sample < 1 || bits_per_sample > 16) throw DomainError("bits per sample must lie in [1, 16]");
    return std::ldexp(1.0, bits_per_sample) - 1.0;
}

double psnr_from_mse(double m, double peak) {
    if (m == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(peak * peak / m);
}

}  // namespace

double mae(const Image& a, const Image& b) {
    const auto s = error_sums(a, b);
    return static_cast<double>(s.abs_sum) / static_cast<double>(s.samples);
}

double mse(const Image& a, const Image& b) {
    const auto s = error_sums(a, b);
    return static_cast<double>(s.sq_sum) / static_cast<double>(s.samples);
}

double psnr(const Image& a, const Image& b, int bits_per_sample) {
    const double peak = peak_for(bits_per_sample);
    return psnr_from_mse(mse(a, b), peak);
}

MetricsReport compute_report(const Image& reference, const Image& candidate, int bits_per_sample) {
    const double peak = peak_for(bits_per_sample);
    const auto s = error_sums(reference, candidate);
    MetricsReport r;
    r.mae = static_cast<double>(s.abs_sum) / static_cast<double>(s.samples);
    r.mse = static_cast<double>(s.sq_sum) / static_cast<double>(s.samples);
    r.psnr = psnr_from_mse(r.mse, peak);
    r.rows = s.rows;
    r.cols = s.cols;
    r.channels = s.channels;
    r.peak = static_cast<int>(peak);
    return r;
}

GrayImage diff_map(const GrayImage& a, const GrayImage& b) {
    if (!a.same_shape(b)) throw ShapeError("image dimensions differ");
    std::vector<std::uint8_t> px(a.size());
    for (std::size_t i = 0; i < px.size(); ++i) {
        px[i] = static_cast<std::uint8_t>(std::abs(int{a.data()[i]} - int{b.data()[i]}));
    }
    return GrayImage(a.rows(), a.cols(), std::move(px));
}

std::string format_full(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

std::string format_fixed4(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out << std::fixed << std::setprecision(4) << v;
    return out.str();
}

std::string comparison_csv(const MetricsReport& classical, const MetricsReport& quantum_boolean) {
    std::ostringstream out;
    out << "metric,classical,quantum_boolean\n";
    out << "MAE," << format_full(classical.mae) << ',' << format_full(quantum_boolean.mae) << '\n';
    out << "MSE," << format_full(classical.mse) << ',' << format_full(quantum_boolean.mse) << '\n';
    out << "PSNR," << format_full(classical.psnr) << ',' << format_full(quantum_boolean.psnr) << '\n';
    return out.str();
}

std::string comparison_table(const MetricsReport& classical, const MetricsReport& quantum_boolean) {
    std::ostringstream out;
    out << std::left << std::setw(8) << "METRIC" << std::right << std::setw(12) << "CLASSICAL"
        << std::setw(18) << "QUANTUM-BOOLEAN" << '\n';
    auto row = [&](const char* name, double c, double q) {
        out << std::left << std::setw(8) << name << std::right << std::setw(12) << format_fixed4(c)
            << std::setw(18) << format_fixed4(q) << '\n';
    };
    row("MAE", classical.mae, quantum_boolean.mae);
    row("MSE", classical.mse, quantum_boolean.mse);
    row("PSNR", classical.psnr, quantum_boolean.psnr);
    return out.str();
}

std::string report_csv(const MetricsReport& r, const std::string& column) {
    std::ostringstream out;
    out << "metric," << column << '\n';
    out << "MAE," << format_full(r.mae) << '\n';
    out << "MSE," << format_full(r.mse) << '\n';
    out << "PSNR," << format_full(r.psnr) << '\n';
    return out.str();
}

std::string report_table(const MetricsReport& r, const std::string& column) {
    std::ostringstream out;
    out << std::left << std::setw(8) << "METRIC" << std::right << std::setw(12) << column << '\n';
    out << std::left << std::setw(8) << "MAE" << std::right << std::setw(12) << format_fixed4(r.mae) << '\n';
    out << std::left << std::setw(8) << "MSE" << std::right << std::setw(12) << format_fixed4(r.mse) << '\n';
    out << std::left << std::setw(8) << "PSNR" << std::right << std::setw(12) << format_fixed4(r.psnr) << '\n';
    return out.str();
}

}  // namespace qbip
