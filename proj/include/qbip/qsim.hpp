#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "qbip/bitplane.hpp"
#include "qbip/grid.hpp"
#include "qbip/random.hpp"

namespace qbip {

using Complex = std::complex<double>;

inline constexpr double kAlgebraicTol = 1e-12;
inline constexpr double kCbsTol = 1e-9;

/// Normalized single-qubit state alpha|0> + beta|1>. Global phase is not tracked.
class QubitState {
public:
    /// |0>.
    QubitState() noexcept : alpha_(1.0, 0.0), beta_(0.0, 0.0) {}
    /// Throws DomainError unless |alpha|^2 + |beta|^2 == 1 within 1e-12.
    QubitState(Complex alpha, Complex beta);

    static QubitState zero() noexcept { return {}; }
    static QubitState one() noexcept;
    /// Scales (alpha, beta) to unit norm; throws DomainError on a zero vector.
    static QubitState normalized(Complex alpha, Complex beta);

    Complex alpha() const noexcept { return alpha_; }
    Complex beta() const noexcept { return beta_; }

    double norm_squared() const noexcept { return std::norm(alpha_) + std::norm(beta_); }

    /// True for |0> or |1> (|alpha| within `tol` of 1 or 0).
    bool is_cbs(double tol = kCbsTol) const noexcept;

    friend bool operator==(const QubitState&, const QubitState&) = default;

private:
    Complex alpha_;
    Complex beta_;
};

/// States equal up to one unit-modulus scalar factor.
bool equal_up_to_global_phase(const QubitState& a, const QubitState& b, double tol = kAlgebraicTol);

struct BlochAngles {
    double theta = 0.0;  ///< polar angle, [0, pi]
    double phi = 0.0;    ///< azimuth, [0, 2pi); 0 at the poles
};

QubitState from_bloch(const BlochAngles& a);
BlochAngles to_bloch(const QubitState& q);

/// Row-major 2x2 complex matrix.
struct Matrix2 {
    std::array<Complex, 4> m{};

    Complex operator()(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }
    Matrix2 adjoint() const;
    Matrix2 operator*(const Matrix2& o) const;
    Matrix2 operator+(const Matrix2& o) const;
    Matrix2 operator*(double s) const;
    std::array<Complex, 2> apply(Complex a, Complex b) const;

    static Matrix2 identity();
};

struct MeasurementOperator {
    int outcome;
    Matrix2 op;
};

/// Labelled measurement operators M_m. Completeness is checked at use, not construction.
struct MeasurementOperatorSet {
    std::vector<MeasurementOperator> operators;

    /// {|0><0| -> 0, |1><1| -> 1}.
    static MeasurementOperatorSet z_basis();
};

struct CompletenessCheck {
    bool complete;
    double max_deviation;  ///< max-abs entry of sum(M^dagger M) - I
};

CompletenessCheck check_completeness(const MeasurementOperatorSet& ops);

struct OutcomeProbability {
    int outcome;
    double probability;
};

/// p(m) = <psi|M_m^dagger M_m|psi>. Throws CompletenessError for incomplete sets.
std::vector<OutcomeProbability> outcome_probabilities(const QubitState& q, const MeasurementOperatorSet& ops);

struct MeasurementResult {
    int outcome;
    QubitState post_state;
};

/// Samples an outcome and collapses to M_m|psi> / sqrt(p(m)). Zero-probability
/// outcomes are never selected.
MeasurementResult measure(const QubitState& q, const MeasurementOperatorSet& ops, RandomStream& rng);

/// Classical-to-quantum interface for one bit: 0 -> |0>, 1 -> |1>.
QubitState c2q(int bit);

/// Quantum-to-classical interface: Z measurement, outcome m -> bit m.
/// In strict mode a non-CBS input raises CbsViolationError.
int q2c(const QubitState& q, RandomStream& rng, bool strict = true);

/// Matrix of qubit states representing one bitplane inside the machine.
class QuantumPlane {
public:
    QuantumPlane(std::size_t rows, std::size_t cols, const QubitState& fill = QubitState::zero())
        : states_(rows, cols, fill) {}

    std::size_t rows() const noexcept { return states_.rows(); }
    std::size_t cols() const noexcept { return states_.cols(); }

    const QubitState& operator()(std::size_t r, std::size_t c) const { return states_(r, c); }
    void set(std::size_t r, std::size_t c, const QubitState& q) { states_(r, c) = q; }

    friend bool operator==(const QuantumPlane&, const QuantumPlane&) = default;

private:
    Grid<QubitState> states_;
};

QuantumPlane c2q_plane(const Bitplane& p);

/// Elementwise q2c; pixel (r, c) draws from the sub-stream (seed, r, c).
/// CbsViolationError carries the offending location.
Bitplane q2c_plane(const QuantumPlane& qp, std::uint64_t seed, bool strict = true);

/// Amplitude readout |alpha| * 255 for inspection; does not measure.
GrayImage render_alpha(const QuantumPlane& qp);

}  // namespace qbip
