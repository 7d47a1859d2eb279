#include "qbip/qsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qbip {

QubitState::QubitState(Complex alpha, Complex beta) : alpha_(alpha), beta_(beta) {
    const double n = norm_squared();
    if (!std::isfinite(n) || std::abs(n - 1.0) > kAlgebraicTol) {
        throw DomainError("qubit state not normalized: |alpha|^2 + |beta|^2 = " + std::to_string(n));
    }
}

QubitState QubitState::one() noexcept {
    QubitState q;
    q.alpha_ = Complex(0.0, 0.0);
    q.beta_ = Complex(1.0, 0.0);
    return q;
}

QubitState QubitState::normalized(Complex alpha, Complex beta) {
    const double n = std::sqrt(std::norm(alpha) + std::norm(beta));
    if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("cannot normalize a zero or non-finite vector");
    return QubitState(alpha / n, beta / n);
}

bool QubitState::is_cbs(double tol) const noexcept {
    const double a = std::abs(alpha_);
    return std::abs(a - 1.0) <= tol || a <= tol;
}

bool equal_up_to_global_phase(const QubitState& a, const QubitState& b, double tol) {
    // Best phase g minimizing ||b - g a|| is <a|b> / |<a|b>|.
    const Complex overlap = std::conj(a.alpha()) * b.alpha() + std::conj(a.beta()) * b.beta();
    const double mag = std::abs(overlap);
    if (mag < 0.5) return false;
    const Complex g = overlap / mag;
    return std::abs(b.alpha() - g * a.alpha()) <= tol && std::abs(b.beta() - g * a.beta()) <= tol;
}

QubitState from_bloch(const BlochAngles& a) {
    using std::numbers::pi;
    if (!(a.theta >= 0.0 && a.theta <= pi)) {
        throw DomainError("theta must lie in [0, pi], got " + std::to_string(a.theta));
    }
    if (!(a.phi >= 0.0 && a.phi < 2.0 * pi)) {
        throw DomainError("phi must lie in [0, 2pi), got " + std::to_string(a.phi));
    }
    const double half = a.theta / 2.0;
    return QubitState(Complex(std::cos(half), 0.0), std::polar(std::sin(half), a.phi));
}

BlochAngles to_bloch(const QubitState& q) {
    using std::numbers::pi;
    if (std::abs(q.norm_squared() - 1.0) > kAlgebraicTol) throw DomainError("to_bloch needs a normalized state");

    const double ma = std::abs(q.alpha());
    const double mb = std::abs(q.beta());
    if (mb <= kAlgebraicTol) return {0.0, 0.0};
    if (ma <= kAlgebraicTol) return {pi, 0.0};

    // Rotate away the global phase so alpha is real and positive.
    const double phi_raw = std::arg(q.beta()) - std::arg(q.alpha());
    double phi = std::fmod(phi_raw, 2.0 * pi);
    if (phi < 0.0) phi += 2.0 * pi;
    if (phi >= 2.0 * pi) phi = 0.0;
    return {2.0 * std::atan2(mb, ma), phi};
}

Matrix2 Matrix2::adjoint() const {
    return Matrix2{{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
}

Matrix2 Matrix2::operator*(const Matrix2& o) const {
    return Matrix2{{m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
                    m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]}};
}

Matrix2 Matrix2::operator+(const Matrix2& o) const {
    return Matrix2{{m[0] + o.m[0], m[1] + o.m[1], m[2] + o.m[2], m[3] + o.m[3]}};
}

Matrix2 Matrix2::operator*(double s) const {
    return Matrix2{{m[0] * s, m[1] * s, m[2] * s, m[3] * s}};
}

std::array<Complex, 2> Matrix2::apply(Complex a, Complex b) const {
    return {m[0] * a + m[1] * b, m[2] * a + m[3] * b};
}

Matrix2 Matrix2::identity() {
    return Matrix2{{1.0, 0.0, 0.0, 1.0}};
}

MeasurementOperatorSet MeasurementOperatorSet::z_basis() {
    return {{{0, Matrix2{{1.0, 0.0, 0.0, 0.0}}}, {1, Matrix2{{0.0, 0.0, 0.0, 1.0}}}}};
}

CompletenessCheck check_completeness(const MeasurementOperatorSet& ops) {
    Matrix2 sum{};
    for (const auto& mo : ops.operators) sum = sum + mo.op.adjoint() * mo.op;
    const Matrix2 id = Matrix2::identity();
    double dev = 0.0;
    for (std::size_t i = 0; i < 4; ++i) dev = std::max(dev, std::abs(sum.m[i] - id.m[i]));
    return {dev <= kAlgebraicTol, dev};
}

std::vector<OutcomeProbability> outcome_probabilities(const QubitState& q, const MeasurementOperatorSet& ops) {
    const auto check = check_completeness(ops);
    if (!check.complete) {
        throw CompletenessError("measurement operators violate completeness, deviation " +
                                std::to_string(check.max_deviation));
    }
    std::vector<OutcomeProbability> out;
    out.reserve(ops.operators.size());
    for (const auto& mo : ops.operators) {
        // <psi|M^dagger M|psi> = ||M psi||^2
        const auto v = mo.op.apply(q.alpha(), q.beta());
        out.push_back({mo.outcome, std::norm(v[0]) + std::norm(v[1])});
    }
    return out;
}

MeasurementResult measure(const QubitState& q, const MeasurementOperatorSet& ops, RandomStream& rng) {
    const auto probs = outcome_probabilities(q, ops);

    std::size_t chosen = probs.size();
    const double u = rng.uniform();
    double cumulative = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i].probability <= 0.0) continue;
        chosen = i;  // last positive branch absorbs rounding shortfall
        cumulative += probs[i].probability;
        if (u < cumulative) break;
    }
    if (chosen == probs.size()) throw DomainError("no measurement outcome has positive probability");

    const auto& mo = ops.operators[chosen];
    const auto v = mo.op.apply(q.alpha(), q.beta());
    const double scale = std::sqrt(probs[chosen].probability);
    return {mo.outcome, QubitState::normalized(v[0] / scale, v[1] / scale)};
}

QubitState c2q(int bit) {
    if (bit == 0) return QubitState::zero();
    if (bit == 1) return QubitState::one();
    throw DomainError("classical-to-quantum input must be 0 or 1, got " + std::to_string(bit));
}

namespace {

int q2c_at(const QubitState& q, RandomStream& rng, bool strict, std::size_t r, std::size_t c) {
    if (strict && !q.is_cbs()) {
        throw CbsViolationError("state at (" + std::to_string(r) + ", " + std::to_string(c) +
                                    ") is not a computational basis state",
                                r, c);
    }
    static const MeasurementOperatorSet z = MeasurementOperatorSet::z_basis();
    return measure(q, z, rng).outcome;
}

}  // namespace

int q2c(const QubitState& q, RandomStream& rng, bool strict) {
    return q2c_at(q, rng, strict, 0, 0);
}

QuantumPlane c2q_plane(const Bitplane& p) {
    QuantumPlane qp(p.rows(), p.cols());
    for (std::size_t r = 0; r < p.rows(); ++r) {
        for (std::size_t c = 0; c < p.cols(); ++c) qp.set(r, c, c2q(p(r, c)));
    }
    return qp;
}

Bitplane q2c_plane(const QuantumPlane& qp, std::uint64_t seed, bool strict) {
    Bitplane out(qp.rows(), qp.cols());
    for (std::size_t r = 0; r < qp.rows(); ++r) {
        for (std::size_t c = 0; c < qp.cols(); ++c) {
            auto rng = RandomStream::derive(seed, {r, c});
            out.set(r, c, q2c_at(qp(r, c), rng, strict, r, c) == 1);
        }
    }
    return out;
}

GrayImage render_alpha(const QuantumPlane& qp) {
    GrayImage out(qp.rows(), qp.cols());
    for (std::size_t r = 0; r < qp.rows(); ++r) {
        for (std::size_t c = 0; c < qp.cols(); ++c) {
            out(r, c) = static_cast<std::uint8_t>(std::lround(std::clamp(std::abs(qp(r, c).alpha()), 0.0, 1.0) * 255.0));
        }
    }
    return out;
}

}  // namespace qbip
