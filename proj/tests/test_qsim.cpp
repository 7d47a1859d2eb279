#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qbip/qsim.hpp"
#include "test_support.hpp"

namespace qbip {
namespace {

using std::numbers::pi;
constexpr double kTol = 1e-12;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void expect_state(const QubitState& q, Complex alpha, Complex beta, double tol = kTol) {
    EXPECT_NEAR(std::abs(q.alpha() - alpha), 0.0, tol);
    EXPECT_NEAR(std::abs(q.beta() - beta), 0.0, tol);
}

TEST(QubitState, RejectsUnnormalized) {
    EXPECT_THROW(QubitState(1.0, 1.0), DomainError);
    EXPECT_THROW(QubitState::normalized(0.0, 0.0), DomainError);
}

TEST(QubitState, GlobalPhaseComparator) {
    const QubitState q(kInvSqrt2, Complex(0.0, kInvSqrt2));
    const Complex g = std::polar(1.0, 1.234);
    EXPECT_TRUE(equal_up_to_global_phase(q, QubitState(g * q.alpha(), g * q.beta())));
    EXPECT_FALSE(equal_up_to_global_phase(q, QubitState(kInvSqrt2, kInvSqrt2)));
    EXPECT_FALSE(equal_up_to_global_phase(QubitState::zero(), QubitState::one()));
}

TEST(Bloch, Poles) {
    expect_state(from_bloch({0.0, 0.0}), 1.0, 0.0);
    expect_state(from_bloch({pi, 0.0}), 0.0, 1.0);
}

TEST(Bloch, Equator) {
    expect_state(from_bloch({pi / 2, 0.0}), kInvSqrt2, kInvSqrt2);
}

TEST(Bloch, RejectsOutOfRangeAngles) {
    EXPECT_THROW(from_bloch({-0.1, 0.0}), DomainError);
    EXPECT_THROW(from_bloch({pi + 0.1, 0.0}), DomainError);
    EXPECT_THROW(from_bloch({1.0, 2 * pi}), DomainError);
}

TEST(Bloch, ToBlochCanonicalizesPoles) {
    auto a = to_bloch(QubitState::zero());
    EXPECT_EQ(a.theta, 0.0);
    EXPECT_EQ(a.phi, 0.0);
    a = to_bloch(QubitState(0.0, Complex(0.0, 1.0)));  // |1> with a phase
    EXPECT_NEAR(a.theta, pi, kTol);
    EXPECT_EQ(a.phi, 0.0);
}

TEST(Bloch, ToBlochSolvesForAngles) {
    const auto a = to_bloch(QubitState(kInvSqrt2, Complex(0.0, kInvSqrt2)));
    EXPECT_NEAR(a.theta, pi / 2, kTol);
    EXPECT_NEAR(a.phi, pi / 2, kTol);
}

TEST(Bloch, RoundTripsProperty) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> th(1e-3, pi - 1e-3), ph(0.0, 2 * pi);
    for (int i = 0; i < 200; ++i) {
        const BlochAngles a{th(rng), ph(rng)};
        const BlochAngles b = to_bloch(from_bloch(a));
        EXPECT_NEAR(b.theta, a.theta, 1e-9);
        const double dphi = std::remainder(b.phi - a.phi, 2 * pi);
        EXPECT_NEAR(dphi, 0.0, 1e-9);

        const QubitState q = testing::random_state(rng);
        EXPECT_TRUE(equal_up_to_global_phase(from_bloch(to_bloch(q)), q, 1e-10));
    }
}

TEST(Completeness, ZBasisIsExact) {
    const auto c = check_completeness(MeasurementOperatorSet::z_basis());
    EXPECT_TRUE(c.complete);
    EXPECT_EQ(c.max_deviation, 0.0);
}

TEST(Completeness, MissingOperatorFails) {
    auto ops = MeasurementOperatorSet::z_basis();
    ops.operators.pop_back();
    EXPECT_FALSE(check_completeness(ops).complete);
}

TEST(Completeness, ScaledOperatorFails) {
    auto ops = MeasurementOperatorSet::z_basis();
    ops.operators[0].op = ops.operators[0].op * 0.5;
    const auto c = check_completeness(ops);
    EXPECT_FALSE(c.complete);
    EXPECT_NEAR(c.max_deviation, 0.75, kTol);  // 1 - 0.5^2
}

TEST(Probabilities, ZBasisGivesSquaredMagnitudes) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 50; ++i) {
        const QubitState q = testing::random_state(rng);
        const auto p = outcome_probabilities(q, MeasurementOperatorSet::z_basis());
        ASSERT_EQ(p.size(), 2u);
        EXPECT_NEAR(p[0].probability, std::norm(q.alpha()), kTol);
        EXPECT_NEAR(p[1].probability, std::norm(q.beta()), kTol);
        EXPECT_NEAR(p[0].probability + p[1].probability, 1.0, kTol);
    }
}

TEST(Probabilities, BasisAndEquatorStates) {
    auto p = outcome_probabilities(QubitState::zero(), MeasurementOperatorSet::z_basis());
    EXPECT_EQ(p[0].probability, 1.0);
    EXPECT_EQ(p[1].probability, 0.0);
    p = outcome_probabilities(QubitState(kInvSqrt2, kInvSqrt2), MeasurementOperatorSet::z_basis());
    EXPECT_NEAR(p[0].probability, 0.5, kTol);
    EXPECT_NEAR(p[1].probability, 0.5, kTol);
}

TEST(Probabilities, IncompleteSetThrows) {
    auto ops = MeasurementOperatorSet::z_basis();
    ops.operators.pop_back();
    EXPECT_THROW(outcome_probabilities(QubitState::zero(), ops), CompletenessError);
}

TEST(Probabilities, WorksForNonProjectiveSet) {
    // M0 = diag(1, 1/sqrt2), M1 = diag(0, 1/sqrt2): complete but not projective.
    MeasurementOperatorSet ops{{{0, Matrix2{{1.0, 0.0, 0.0, kInvSqrt2}}}, {1, Matrix2{{0.0, 0.0, 0.0, kInvSqrt2}}}}};
    ASSERT_TRUE(check_completeness(ops).complete);
    const auto p = outcome_probabilities(QubitState::one(), ops);
    EXPECT_NEAR(p[0].probability, 0.5, kTol);
    EXPECT_NEAR(p[1].probability, 0.5, kTol);
}

TEST(Measure, BasisStatesAreFixedPoints) {
    RandomStream rng(99);
    for (int i = 0; i < 1000; ++i) {
        auto r0 = measure(QubitState::zero(), MeasurementOperatorSet::z_basis(), rng);
        EXPECT_EQ(r0.outcome, 0);
        EXPECT_EQ(r0.post_state, QubitState::zero());
        auto r1 = measure(QubitState::one(), MeasurementOperatorSet::z_basis(), rng);
        EXPECT_EQ(r1.outcome, 1);
        EXPECT_EQ(r1.post_state, QubitState::one());
    }
}

TEST(Measure, CollapsesToBasisState) {
    RandomStream rng(5);
    const QubitState q(std::sqrt(0.36), Complex(0.0, std::sqrt(0.64)));
    for (int i = 0; i < 100; ++i) {
        const auto r = measure(q, MeasurementOperatorSet::z_basis(), rng);
        EXPECT_NEAR(r.post_state.norm_squared(), 1.0, kTol);
        EXPECT_TRUE(equal_up_to_global_phase(r.post_state, r.outcome == 0 ? QubitState::zero() : QubitState::one()));
    }
}

TEST(Measure, FrequencyWithinThreeSigma) {
    const QubitState q(std::sqrt(0.36), std::sqrt(0.64));
    RandomStream rng(2024);
    constexpr int n = 100000;
    int ones = 0;
    for (int i = 0; i < n; ++i) ones += measure(q, MeasurementOperatorSet::z_basis(), rng).outcome;
    const double sigma = std::sqrt(0.64 * 0.36 / n);
    EXPECT_NEAR(static_cast<double>(ones) / n, 0.64, 3 * sigma);
}

TEST(Interfaces, C2q) {
    EXPECT_EQ(c2q(0), QubitState::zero());
    EXPECT_EQ(c2q(1), QubitState::one());
    EXPECT_EQ(c2q(0).alpha(), Complex(1.0, 0.0));
    EXPECT_EQ(c2q(1).alpha(), Complex(0.0, 0.0));
    EXPECT_THROW(c2q(2), DomainError);
}

TEST(Interfaces, Q2cRoundTrip) {
    RandomStream rng(1);
    EXPECT_EQ(q2c(QubitState::zero(), rng), 0);
    EXPECT_EQ(q2c(QubitState::one(), rng), 1);
    for (int b : {0, 1}) EXPECT_EQ(q2c(c2q(b), rng), b);
}

TEST(Interfaces, StrictQ2cRejectsSuperposition) {
    RandomStream rng(1);
    EXPECT_THROW(q2c(QubitState(kInvSqrt2, kInvSqrt2), rng), CbsViolationError);
    const int bit = q2c(QubitState(kInvSqrt2, kInvSqrt2), rng, /*strict=*/false);
    EXPECT_TRUE(bit == 0 || bit == 1);
}

TEST(Interfaces, PlaneRoundTrip) {
    std::mt19937_64 rng(3);
    EXPECT_EQ(q2c_plane(c2q_plane(Bitplane(3, 3, true)), 1), Bitplane(3, 3, true));
    const QuantumPlane zeros = c2q_plane(Bitplane(2, 2, false));
    EXPECT_EQ(zeros(1, 1), QubitState::zero());
    for (int i = 0; i < 20; ++i) {
        const Bitplane p = testing::random_plane(rng, 11, 13);
        EXPECT_EQ(q2c_plane(c2q_plane(p), static_cast<std::uint64_t>(i)), p);
    }
}

TEST(Interfaces, PlaneViolationCarriesLocation) {
    QuantumPlane qp = c2q_plane(Bitplane(4, 5, false));
    qp.set(2, 3, QubitState(kInvSqrt2, kInvSqrt2));
    try {
        q2c_plane(qp, 7);
        FAIL() << "expected CbsViolationError";
    } catch (const CbsViolationError& e) {
        EXPECT_EQ(e.row(), 2u);
        EXPECT_EQ(e.col(), 3u);
    }
}

TEST(Interfaces, NonStrictPlaneIsSeedDeterministic) {
    QuantumPlane qp(6, 6, QubitState(kInvSqrt2, kInvSqrt2));
    EXPECT_EQ(q2c_plane(qp, 42, false), q2c_plane(qp, 42, false));
}

TEST(Interfaces, RenderAlphaIsInvertedMsb) {
    const Bitplane p = testing::plane_from({{0, 1}});
    EXPECT_EQ(render_alpha(c2q_plane(p)), testing::gray_from({{255, 0}}));
}

}  // namespace
}  // namespace qbip
