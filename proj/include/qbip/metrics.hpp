#pragma once

#include <string>

#include "qbip/image_io.hpp"

namespace qbip {

/// Error figures of one image against a reference.
struct MetricsReport {
    double mae = 0.0;
    double mse = 0.0;
    /// Decibels; +infinity when mse == 0.
    double psnr = 0.0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    int channels = 1;
    int peak = 255;
};

// Color images average over all R*C*3 samples. Shape mismatch (including gray
// against color) throws ShapeError.
double mae(const Image& a, const Image& b);
double mse(const Image& a, const Image& b);
/// 10*log10((2^B - 1)^2 / mse); +infinity for identical inputs.
double psnr(const Image& a, const Image& b, int bits_per_sample = 8);

MetricsReport compute_report(const Image& reference, const Image& candidate, int bits_per_sample = 8);

/// |a - b| per pixel.
GrayImage diff_map(const GrayImage& a, const GrayImage& b);

/// Two-column comparison in the classical / quantum-Boolean layout.
std::string comparison_csv(const MetricsReport& classical, const MetricsReport& quantum_boolean);
std::string comparison_table(const MetricsReport& classical, const MetricsReport& quantum_boolean);

/// `metric,<column>` listing of a single report.
std::string report_csv(const MetricsReport& r, const std::string& column = "value");
std::string report_table(const MetricsReport& r, const std::string& column = "value");

/// Shortest round-trip decimal, "inf" for infinity.
std::string format_full(double v);
/// Four fractional digits, "inf" for infinity.
std::string format_fixed4(double v);

}  // namespace qbip
