#include "qbip/filters.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace qbip {

KernelSpec::KernelSpec(int window) : w_(window) {
    if (window < 3 || window % 2 == 0) {
        throw DomainError("kernel window must be odd and >= 3, got " + std::to_string(window));
    }
}

namespace {

void check_fits(std::size_t rows, std::size_t cols, const KernelSpec& k) {
    const auto w = static_cast<std::size_t>(k.window());
    if (rows < w || cols < w) {
        throw ShapeError(std::to_string(rows) + "x" + std::to_string(cols) + " raster is smaller than the " +
                         std::to_string(w) + "x" + std::to_string(w) + " kernel");
    }
}

/// Summed-area table with a zero guard row and column.
class IntegralImage {
public:
    template <typename Value>
    IntegralImage(std::size_t rows, std::size_t cols, Value&& value)
        : stride_(cols + 1), sums_((rows + 1) * (cols + 1), 0) {
        for (std::size_t r = 0; r < rows; ++r) {
            std::uint64_t row_sum = 0;
            for (std::size_t c = 0; c < cols; ++c) {
                row_sum += value(r, c);
                sums_[(r + 1) * stride_ + c + 1] = sums_[r * stride_ + c + 1] + row_sum;
            }
        }
    }

    /// Sum over the square of half-width `m` centered at (r, c).
    std::uint64_t window_sum(std::size_t r, std::size_t c, std::size_t m) const {
        const std::size_t r0 = r - m, r1 = r + m + 1;
        const std::size_t c0 = c - m, c1 = c + m + 1;
        return sums_[r1 * stride_ + c1] - sums_[r0 * stride_ + c1] - sums_[r1 * stride_ + c0] +
               sums_[r0 * stride_ + c0];
    }

private:
    std::size_t stride_;
    std::vector<std::uint64_t> sums_;
};

}  // namespace

Bitplane qbmf(const Bitplane& p, const KernelSpec& k) {
    check_fits(p.rows(), p.cols(), k);
    const IntegralImage ones(p.rows(), p.cols(), [&](std::size_t r, std::size_t c) { return p(r, c); });
    const auto m = static_cast<std::size_t>(k.margin());
    const auto h = static_cast<std::uint64_t>(k.threshold());

    Bitplane out = p;
    for (std::size_t r = m; r + m < p.rows(); ++r) {
        for (std::size_t c = m; c + m < p.cols(); ++c) out.set(r, c, ones.window_sum(r, c, m) >= h);
    }
    return out;
}

QuantumPlane qbmf_quantum(const QuantumPlane& qp, const KernelSpec& k) {
    check_fits(qp.rows(), qp.cols(), k);
    for (std::size_t r = 0; r < qp.rows(); ++r) {
        for (std::size_t c = 0; c < qp.cols(); ++c) {
            if (!qp(r, c).is_cbs()) {
                throw CbsViolationError("quantum filter input at (" + std::to_string(r) + ", " +
                                            std::to_string(c) + ") is not a computational basis state",
                                        r, c);
            }
        }
    }
    // A CBS is |1> exactly when |alpha| is near 0.
    const IntegralImage ones(qp.rows(), qp.cols(), [&](std::size_t r, std::size_t c) {
        return std::abs(qp(r, c).alpha()) <= kCbsTol ? 1u : 0u;
    });
    const auto m = static_cast<std::size_t>(k.margin());
    const auto h = static_cast<std::uint64_t>(k.threshold());

    QuantumPlane out(qp.rows(), qp.cols());
    for (std::size_t r = 0; r < qp.rows(); ++r) {
        for (std::size_t c = 0; c < qp.cols(); ++c) {
            const bool interior = r >= m && r + m < qp.rows() && c >= m && c + m < qp.cols();
            if (!interior) {
                // Border: re-prepare the measured basis state so outputs are exact CBS.
                out.set(r, c, std::abs(qp(r, c).alpha()) <= kCbsTol ? QubitState::one() : QubitState::zero());
            } else {
                out.set(r, c, ones.window_sum(r, c, m) >= h ? QubitState::one() : QubitState::zero());
            }
        }
    }
    return out;
}

GrayImage mean_filter(const GrayImage& ch, const KernelSpec& k) {
    check_fits(ch.rows(), ch.cols(), k);
    const IntegralImage sums(ch.rows(), ch.cols(), [&](std::size_t r, std::size_t c) { return ch(r, c); });
    const auto m = static_cast<std::size_t>(k.margin());
    const auto area = static_cast<std::uint64_t>(k.area());

    GrayImage out = ch;
    for (std::size_t r = m; r + m < ch.rows(); ++r) {
        for (std::size_t c = m; c + m < ch.cols(); ++c) {
            // round(sum / area) with halves going up, in exact integer arithmetic
            const std::uint64_t mean = (2 * sums.window_sum(r, c, m) + area) / (2 * area);
            out(r, c) = static_cast<std::uint8_t>(std::min<std::uint64_t>(mean, 255));
        }
    }
    return out;
}

Bitplane majority_oracle(const Bitplane& p, const KernelSpec& k) {
    check_fits(p.rows(), p.cols(), k);
    const long rows = static_cast<long>(p.rows());
    const long cols = static_cast<long>(p.cols());
    const long m = k.margin();

    Bitplane out(p.rows(), p.cols());
    for (long r = 0; r < rows; ++r) {
        for (long c = 0; c < cols; ++c) {
            const bool interior = r >= m && r < rows - m && c >= m && c < cols - m;
            if (!interior) {
                out.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), p(r, c) == 1);
                continue;
            }
            int n = 0;
            for (long dr = -m; dr <= m; ++dr) {
                for (long dc = -m; dc <= m; ++dc) n += p(static_cast<std::size_t>(r + dr), static_cast<std::size_t>(c + dc));
            }
            // Strict majority: more ones than zeros in the window.
            out.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c), 2 * n > k.area());
        }
    }
    return out;
}

}  // namespace qbip
