#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "yjunction/junction.hpp"

namespace yjunction {
namespace {

using testing::kPi;

TEST(JunctionParams, CanonicalizesAndValidates) {
  const JunctionParams p({2 * kPi, -kPi / 2, 5 * kPi}, {-0.5, 0, 0, 0, 0, 7.0}, 2.0);
  EXPECT_NEAR(p.theta()[0], 0.0, 1e-15);
  EXPECT_NEAR(p.theta()[1], 1.5 * kPi, 1e-15);
  EXPECT_NEAR(p.theta()[2], kPi, 1e-14);
  EXPECT_NEAR(p.euler().alpha, 2 * kPi - 0.5, 1e-15);
  EXPECT_NEAR(p.euler().b, 7.0 - 2 * kPi, 1e-15);
  for (double t : p.theta()) {
    EXPECT_GE(t, 0.0);
    EXPECT_LT(t, 2 * kPi);
  }
  EXPECT_THROW(JunctionParams({0, 0, 0}, {}, 0.0), std::invalid_argument);
  EXPECT_THROW(JunctionParams({0, 0, 0}, {}, -1.0), std::invalid_argument);
  EXPECT_THROW(JunctionParams({NAN, 0, 0}, {}, 1.0), std::invalid_argument);
  EXPECT_THROW(JunctionParams({0, 0, 0}, {0, INFINITY, 0, 0, 0, 0}, 1.0), std::invalid_argument);
  EXPECT_GE(canonical_angle(-1e-18), 0.0);
  EXPECT_LT(canonical_angle(-1e-18), 2 * kPi);
}

TEST(BuildV, IdentityAndUnitary) {
  EXPECT_LT(max_norm(build_V(JunctionParams({0, 0, 0}, {})) - Mat3::identity()), 1e-15);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i)
    EXPECT_LT(unitarity_error(build_V(testing::random_params(rng))), 1e-13);
}

TEST(BuildU, DegenerateEigenphasesGiveMultiplesOfIdentity) {
  std::mt19937_64 rng(2);
  const EulerAngles e = testing::random_euler(rng);
  EXPECT_LT(max_norm(build_U(JunctionParams({0, 0, 0}, e)) - Mat3::identity()), 1e-14);
  EXPECT_LT(max_norm(build_U(JunctionParams({kPi, kPi, kPi}, e)) + Mat3::identity()), 1e-14);
}

// Characteristic polynomial of U against the elementary symmetric
// polynomials of e^{i theta_j}: equal coefficients <=> equal eigenvalue
// multisets.
TEST(BuildU, EigenvaluesAreThePrescribedPhases) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const JunctionParams p = testing::random_params(rng);
    const Mat3 u = build_U(p);
    EXPECT_LT(unitarity_error(u), 1e-12);
    const Complex tr = trace(u);
    const Complex tr2 = trace(mul(u, u));
    const Complex det = u(0, 0) * (u(1, 1) * u(2, 2) - u(1, 2) * u(2, 1)) -
                        u(0, 1) * (u(1, 0) * u(2, 2) - u(1, 2) * u(2, 0)) +
                        u(0, 2) * (u(1, 0) * u(2, 1) - u(1, 1) * u(2, 0));
    const auto& t = p.theta();
    const Complex z1 = std::polar(1.0, t[0]), z2 = std::polar(1.0, t[1]), z3 = std::polar(1.0, t[2]);
    EXPECT_LT(std::abs(tr - (z1 + z2 + z3)), 1e-12);
    EXPECT_LT(std::abs(0.5 * (tr * tr - tr2) - (z1 * z2 + z1 * z3 + z2 * z3)), 1e-12);
    EXPECT_LT(std::abs(det - z1 * z2 * z3), 1e-12);
  }
}

TEST(BuildU, TwoPiShiftInvariance) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const JunctionParams p = testing::random_params(rng);
    const EulerAngles& e = p.euler();
    const JunctionParams q({p.theta()[0] + 2 * kPi, p.theta()[1] - 2 * kPi, p.theta()[2] + 4 * kPi},
                           {e.alpha + 2 * kPi, e.beta - 2 * kPi, e.gamma + 2 * kPi,
                            e.delta + 2 * kPi, e.a - 2 * kPi, e.b + 2 * kPi},
                           p.L0());
    EXPECT_LT(max_norm(build_U(p) - build_U(q)), 1e-12);
  }
}

TEST(SMatrix, FullyReflectingAndTransparentLimits) {
  std::mt19937_64 rng(5);
  const EulerAngles e = testing::random_euler(rng);
  const double k = 1.7, xi = 0.45;
  const Complex phase = std::polar(1.0, 2 * k * xi);
  const ScatteringMatrix pi_node = s_matrix(JunctionParams({kPi, kPi, kPi}, e), k, xi, Orientation::Inward);
  EXPECT_LT(max_norm(pi_node.m + phase * Mat3::identity()), 1e-14);
  const ScatteringMatrix zero_node = s_matrix(JunctionParams({0, 0, 0}, e), k, xi, Orientation::Inward);
  EXPECT_LT(max_norm(zero_node.m - phase * Mat3::identity()), 1e-14);
  EXPECT_EQ(pi_node.k, k);
  EXPECT_EQ(pi_node.xi, xi);
  EXPECT_EQ(pi_node.orientation, Orientation::Inward);
}

TEST(SMatrix, RejectsNonPositiveK) {
  const JunctionParams p({0.3, 1, 2}, {});
  EXPECT_THROW(s_matrix(p, 0.0, 0.0, Orientation::Inward), std::invalid_argument);
  EXPECT_THROW(s_matrix(p, -1.0, 0.0, Orientation::Outward), std::invalid_argument);
}

TEST(SMatrix, OutwardIsAdjointOfInward) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const JunctionParams p = testing::random_params(rng);
    const double k = testing::uniform(rng, 0.1, 20), xi = testing::uniform(rng, -3, 3);
    const Mat3 in = s_matrix(p, k, xi, Orientation::Inward).m;
    const Mat3 out = s_matrix(p, k, xi, Orientation::Outward).m;
    EXPECT_LT(max_norm(out - dagger(in)), 1e-12);
  }
}

TEST(Residual, TrivialCases) {
  const Mat3 u = Mat3::identity();
  EXPECT_EQ(junction_residual(u, 1.0, 2.0, 0.3, Vec3{}, Vec3{}, Orientation::Inward), 0.0);

  // U = I: residual is 2 L0 k max|e^{ik xi} phi - e^{-ik xi} psi|.
  const double L0 = 1.3, k = 2.0, xi = 0.3;
  Vec3 phi, psi;
  phi[0] = Complex(0.4, -0.2);
  phi[1] = 1.0;
  psi[2] = Complex(0.0, 0.5);
  const Vec3 diff = std::polar(1.0, k * xi) * phi - std::polar(1.0, -k * xi) * psi;
  EXPECT_NEAR(junction_residual(u, L0, k, xi, phi, psi, Orientation::Inward),
              2 * L0 * k * max_norm(diff), 1e-14);
  // Zero iff psi = e^{2ik xi} phi.
  EXPECT_LT(junction_residual(u, L0, k, xi, phi, std::polar(1.0, 2 * k * xi) * phi,
                              Orientation::Inward),
            1e-14);
}

TEST(Residual, SMatrixSolvesTheJunctionCondition) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const JunctionParams p = testing::random_params(rng);
    const double k = testing::uniform(rng, 0.1, 20), xi = testing::uniform(rng, -3, 3);
    const Mat3 u = build_U(p);
    for (Orientation o : {Orientation::Inward, Orientation::Outward}) {
      const ScatteringMatrix s = s_matrix(p, k, xi, o);
      EXPECT_LT(unitarity_error(s.m), 1e-12);
      const Vec3 phi = testing::random_vec3(rng);
      EXPECT_LT(junction_residual(u, p.L0(), k, xi, phi, mul(s.m, phi), o), 1e-10);
    }
  }
}

TEST(Residual, DetectsAWrongScatteredWave) {
  const JunctionParams p({0.4, 2.0, 4.0}, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6});
  const ScatteringMatrix s = s_matrix(p, 1.0, 0.0, Orientation::Inward);
  Vec3 phi;
  phi[0] = 1.0;
  const Vec3 wrong = mul(dagger(s.m), phi);
  EXPECT_GT(junction_residual(build_U(p), p.L0(), 1.0, 0.0, phi, wrong, Orientation::Inward), 1e-3);
}

TEST(Probabilities, RowsAndColumnsSumToOne) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const RealMat3 pr =
        probabilities(s_matrix(testing::random_params(rng), testing::uniform(rng, 0.1, 20), 0.3,
                               Orientation::Inward));
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_NEAR(pr[i][0] + pr[i][1] + pr[i][2], 1.0, 1e-12);
      EXPECT_NEAR(pr[0][i] + pr[1][i] + pr[2][i], 1.0, 1e-12);
    }
  }
}

TEST(Probabilities, FullReflectionAndButtiker) {
  const RealMat3 refl =
      probabilities(s_matrix(JunctionParams({kPi, kPi, kPi}, {0.3, 0.1, 0, 0, 0, 0}), 2.0, 1.0,
                             Orientation::Inward));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(refl[i][j], i == j ? 1.0 : 0.0, 1e-14);

  const RealMat3 b =
      probabilities(s_matrix(buttiker_params(kPi / 4), 3.0, 0.0, Orientation::Inward));
  EXPECT_NEAR(b[0][0], 0.0, 1e-14);  // P(1 -> 1)
  EXPECT_NEAR(b[1][0], 0.5, 1e-14);  // P(1 -> 2)
  EXPECT_NEAR(b[2][0], 0.5, 1e-14);  // P(1 -> 3)
}

TEST(TimeReversal, RealEulerFactorsGiveSymmetricS) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    EulerAngles e = testing::random_euler(rng);
    e.alpha = std::bernoulli_distribution(0.5)(rng) ? kPi : 0.0;
    e.gamma = std::bernoulli_distribution(0.5)(rng) ? kPi : 0.0;
    e.a = std::bernoulli_distribution(0.5)(rng) ? kPi : 0.0;
    const JunctionParams p({testing::uniform(rng, 0, 6), testing::uniform(rng, 0, 6),
                            testing::uniform(rng, 0, 6)},
                           e, testing::uniform(rng, 0.2, 3));
    EXPECT_TRUE(is_time_reversal(p));
    const Mat3 s = s_matrix(p, testing::uniform(rng, 0.1, 20), 0.7, Orientation::Inward).m;
    EXPECT_LT(max_norm(s - transpose(s)), 1e-12);
  }
}

// Sampled counterexample: alpha = pi/3 with the remaining angles fixed below.
// max |U - U^T| = 0.9246 for this instance.
TEST(TimeReversal, GenericAlphaBreaksSymmetry) {
  const JunctionParams p({0.4, 1.9, 4.1}, {kPi / 3, 0.7, 1.1, 0.5, 0.9, 1.3}, 1.0);
  EXPECT_FALSE(is_time_reversal(p));
  const Mat3 u = build_U(p);
  EXPECT_GT(max_norm(u - transpose(u)), 1e-3);
}

TEST(TimeReversal, DiagonalUIsSymmetric) {
  const JunctionParams p({0.4, 1.9, 4.1}, {0.3, 0.0, 2.2, 0.0, 1.7, 0.0}, 1.0);
  EXPECT_TRUE(is_time_reversal(p));
}

TEST(ScaleInvariance, Predicate) {
  EXPECT_TRUE(is_scale_invariant(JunctionParams({0, kPi, kPi}, {})));
  EXPECT_FALSE(is_scale_invariant(JunctionParams({0.3, kPi, kPi}, {})));
  EXPECT_TRUE(is_scale_invariant(JunctionParams({2 * kPi, kPi, 3 * kPi}, {})));
  // Typed-in pi is accepted at the default tolerance, not at a tight one.
  EXPECT_TRUE(is_scale_invariant(JunctionParams({0, 3.1415926536, kPi}, {})));
  EXPECT_FALSE(is_scale_invariant(JunctionParams({0, 3.14159, kPi}, {})));
  EXPECT_TRUE(is_scale_invariant(JunctionParams({0, 3.14159, kPi}, {}), 1e-5));
}

TEST(ScaleInvariance, ProbabilitiesIndependentOfK) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const JunctionParams p = testing::random_scale_invariant(rng);
    const double k = testing::uniform(rng, 0.1, 20), xi = testing::uniform(rng, -2, 2);
    for (Orientation o : {Orientation::Inward, Orientation::Outward}) {
      const RealMat3 a = probabilities(s_matrix(p, k, xi, o));
      const RealMat3 b = probabilities(s_matrix(p, 10 * k, xi, o));
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(a[i][j], b[i][j], 1e-12);
    }
  }
}

TEST(Buttiker, ClosedFormValues) {
  const Mat3 b0 = buttiker_matrix(0.0);
  Mat3 expect0;
  expect0(0, 0) = -1.0;
  expect0(1, 2) = 1.0;
  expect0(2, 1) = 1.0;
  EXPECT_LT(max_norm(b0 - expect0), 1e-15);

  const double r = 1.0 / std::sqrt(2.0);
  Mat3 expect;
  expect(0, 1) = expect(0, 2) = expect(1, 0) = expect(2, 0) = r;
  expect(1, 1) = expect(2, 2) = -0.5;
  expect(1, 2) = expect(2, 1) = 0.5;
  EXPECT_LT(max_norm(buttiker_matrix(kPi / 4) - expect), 1e-15);
}

TEST(Buttiker, MatchesEulerConstruction) {
  for (double b : {0.0, kPi / 12, kPi / 6, kPi / 4, 0.37, 1.2, 2.9}) {
    const JunctionParams p = buttiker_params(b);
    EXPECT_TRUE(is_scale_invariant(p));
    EXPECT_TRUE(is_time_reversal(p));
    for (double k : {0.3, 4.0}) {
      const Mat3 s = s_matrix(p, k, 0.0, Orientation::Inward).m;
      EXPECT_LT(max_norm(s - buttiker_matrix(b)), 1e-12) << "b = " << b;
    }
  }
}

TEST(Gauge, FixedPoints) {
  const JunctionParams p({kPi, 0.0, 1.0}, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6}, 1.5);
  for (double l : {0.01, 0.7, 42.0}) {
    const JunctionParams q = gauge_shift(p, l);
    // cos(pi/2) rounds to 6e-17, so pi is a fixed point only to ~1e-14.
    EXPECT_NEAR(q.theta()[0], kPi, 1e-13);
    EXPECT_NEAR(q.theta()[1], 0.0, 1e-15);
    EXPECT_EQ(q.L0(), l);
  }
  EXPECT_THROW(gauge_shift(p, 0.0), std::invalid_argument);
  EXPECT_THROW(gauge_shift(p, -2.0), std::invalid_argument);
}

TEST(Gauge, WorkedExample) {
  const JunctionParams p({kPi / 2, kPi / 2, kPi / 2}, {0.2, 0.9, 1.4, 0.3, 2.2, 0.8}, 1.0);
  const JunctionParams q = gauge_shift(p, 2.0);
  // 2 arccot(1/2) = 2 atan(2)
  EXPECT_NEAR(q.theta()[0], 2.214297435588181, 1e-15);
  for (double k : {0.5, 1.0, 7.0}) {
    const Mat3 a = s_matrix(p, k, 0.3, Orientation::Inward).m;
    const Mat3 b = s_matrix(q, k, 0.3, Orientation::Inward).m;
    EXPECT_LT(max_norm(a - b), 1e-12) << k;
  }
}

TEST(Gauge, LeavesSMatrixInvariant) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const JunctionParams p = testing::random_params(rng);
    const JunctionParams q = gauge_shift(p, p.L0() * testing::uniform(rng, 0.1, 10));
    for (int i = 0; i < 4; ++i) {
      const double k = testing::uniform(rng, 0.1, 20);
      for (Orientation o : {Orientation::Inward, Orientation::Outward})
        EXPECT_LT(max_norm(s_matrix(p, k, 0.4, o).m - s_matrix(q, k, 0.4, o).m), 1e-12);
    }
  }
}

}  // namespace
}  // namespace yjunction
