#pragma once

// Test-only oracles and generators. Nothing here calls the solver paths it is
// used to check.

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "yjunction/junction.hpp"
#include "yjunction/ring.hpp"

namespace yjunction::testing {

inline constexpr double kPi = std::numbers::pi;

/// exp(i * angle * G) by a truncated power series.
inline Mat3 exp_series(const Mat3& generator, double angle, int terms = 30) {
  const Mat3 x = Complex(0.0, angle) * generator;
  Mat3 sum = Mat3::identity();
  Mat3 term = Mat3::identity();
  for (int n = 1; n < terms; ++n) {
    term = (1.0 / n) * mul(term, x);
    sum = sum + term;
  }
  return sum;
}

/// Dense Gaussian elimination with partial pivoting.
template <std::size_t N>
std::array<Complex, N> gauss_solve(std::array<std::array<Complex, N>, N> m,
                                   std::array<Complex, N> rhs) {
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < N; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (std::abs(m[piv][col]) < 1e-300) throw std::runtime_error("gauss_solve: singular");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = col + 1; r < N; ++r) {
      const Complex f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < N; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::array<Complex, N> x{};
  for (std::size_t i = N; i-- > 0;) {
    Complex s = rhs[i];
    for (std::size_t c = i + 1; c < N; ++c) s -= m[i][c] * x[c];
    x[i] = s / m[i][i];
  }
  return x;
}

/// Direct solve of (A, B, D) = S1 (1, C, E) and (F, C, E) = S2 (0, B, D) for
/// the unknown vector (A, B, C, D, E, F).
inline RingAmplitudes brute_force_ring(const Mat3& s1, const Mat3& s2) {
  std::array<std::array<Complex, 6>, 6> m{};
  std::array<Complex, 6> rhs{};
  enum { A, B, C, D, E, F };
  const int left_out[3] = {A, B, D};
  for (int i = 0; i < 3; ++i) {
    m[i][left_out[i]] = 1.0;
    m[i][C] -= s1(i, 1);
    m[i][E] -= s1(i, 2);
    rhs[i] = s1(i, 0);
  }
  const int right_out[3] = {F, C, E};
  for (int i = 0; i < 3; ++i) {
    m[3 + i][right_out[i]] += 1.0;
    m[3 + i][B] -= s2(i, 1);
    m[3 + i][D] -= s2(i, 2);
  }
  const auto x = gauss_solve<6>(m, rhs);
  return {x[A], x[B], x[C], x[D], x[E], x[F]};
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline EulerAngles random_euler(std::mt19937_64& rng) {
  auto u = [&] { return uniform(rng, 0.0, 2.0 * kPi); };
  return {u(), u(), u(), u(), u(), u()};
}

inline JunctionParams random_params(std::mt19937_64& rng) {
  return JunctionParams({uniform(rng, 0.0, 2.0 * kPi), uniform(rng, 0.0, 2.0 * kPi),
                         uniform(rng, 0.0, 2.0 * kPi)},
                        random_euler(rng), uniform(rng, 0.2, 3.0));
}

/// theta_i drawn from {0, pi}, not all equal so the node scatters.
inline JunctionParams random_scale_invariant(std::mt19937_64& rng) {
  std::array<double, 3> theta{};
  do {
    for (double& t : theta) t = std::bernoulli_distribution(0.5)(rng) ? kPi : 0.0;
  } while (theta[0] == theta[1] && theta[1] == theta[2]);
  return JunctionParams(theta, random_euler(rng), uniform(rng, 0.2, 3.0));
}

inline Vec3 random_vec3(std::mt19937_64& rng) {
  Vec3 v;
  for (std::size_t i = 0; i < 3; ++i) v[i] = Complex(uniform(rng, -1, 1), uniform(rng, -1, 1));
  return v;
}

inline RingConfig random_ring(std::mt19937_64& rng, const JunctionParams& left, SymmetryMode mode) {
  const double xi2 = uniform(rng, -2.0, 2.0);
  return RingConfig(left, std::move(mode), xi2 + uniform(rng, 0.1, 3.0), xi2);
}

}  // namespace yjunction::testing
