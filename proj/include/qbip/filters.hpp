#pragma once

#include "qbip/bitplane.hpp"
#include "qbip/image_io.hpp"
#include "qbip/qsim.hpp"

namespace qbip {

/// Square odd window with strict-majority threshold.
class KernelSpec {
public:
    /// Throws DomainError unless `window` is odd and at least 3.
    explicit KernelSpec(int window = 3);

    int window() const noexcept { return w_; }
    /// (w*w + 1) / 2; 5 for a 3x3 window.
    int threshold() const noexcept { return (w_ * w_ + 1) / 2; }
    int margin() const noexcept { return w_ / 2; }
    int area() const noexcept { return w_ * w_; }

private:
    int w_;
};

/// Quantum Boolean mean filter on a classical bitplane.
///
/// Interior pixels become 1 when at least `threshold()` of the w*w input
/// window are 1, else 0. The `margin()`-wide border is copied from the input.
/// Only the input is read, so results do not depend on raster order.
Bitplane qbmf(const Bitplane& p, const KernelSpec& k);

/// Same filter evaluated on the in-machine representation: counts |1> states
/// per window and writes exact |0>/|1> outputs. Every input state must be a
/// computational basis state.
QuantumPlane qbmf_quantum(const QuantumPlane& qp, const KernelSpec& k);

/// w*w box average, rounded half up, with copy-through borders.
GrayImage mean_filter(const GrayImage& ch, const KernelSpec& k);

/// Brute-force per-pixel recount; reference for qbmf.
Bitplane majority_oracle(const Bitplane& p, const KernelSpec& k);

}  // namespace qbip
