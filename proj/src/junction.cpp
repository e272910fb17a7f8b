#include "yjunction/junction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace yjunction {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_finite(double x, const char* name) {
  if (!std::isfinite(x))
    throw std::invalid_argument(std::string("junction parameter '") + name + "' is not finite");
}

void require_positive_k(double k) {
  if (!(k > 0.0) || !std::isfinite(k))
    throw std::invalid_argument("wavenumber k must be positive and finite, got " +
                                std::to_string(k));
}

}  // namespace

double canonical_angle(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2 pi.
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double angle_distance(double x, double y) {
  const double d = canonical_angle(x - y);
  return std::min(d, kTwoPi - d);
}

JunctionParams::JunctionParams(std::array<double, 3> theta, EulerAngles euler, double L0)
    : L0_(L0) {
  const char* theta_names[] = {"theta1", "theta2", "theta3"};
  for (std::size_t i = 0; i < 3; ++i) {
    require_finite(theta[i], theta_names[i]);
    theta_[i] = canonical_angle(theta[i]);
  }
  require_finite(euler.alpha, "alpha");
  require_finite(euler.beta, "beta");
  require_finite(euler.gamma, "gamma");
  require_finite(euler.delta, "delta");
  require_finite(euler.a, "a");
  require_finite(euler.b, "b");
  euler_ = {canonical_angle(euler.alpha), canonical_angle(euler.beta),
            canonical_angle(euler.gamma), canonical_angle(euler.delta),
            canonical_angle(euler.a),     canonical_angle(euler.b)};
  if (!std::isfinite(L0) || !(L0 > 0.0))
    throw std::invalid_argument("junction parameter 'L0' must be positive and finite, got " +
                                std::to_string(L0));
}

Mat3 build_V(const JunctionParams& p) {
  const EulerAngles& e = p.euler();
  Mat3 v = exp_i_generator(3, e.alpha);
  v = mul(v, exp_i_generator(2, e.beta));
  v = mul(v, exp_i_generator(3, e.gamma));
  v = mul(v, exp_i_generator(5, e.delta));
  v = mul(v, exp_i_generator(3, e.a));
  v = mul(v, exp_i_generator(2, e.b));
  return v;
}

Mat3 build_U(const JunctionParams& p) {
  const Mat3 v = build_V(p);
  const auto& t = p.theta();
  const Mat3 d =
      Mat3::diagonal({std::polar(1.0, t[0]), std::polar(1.0, t[1]), std::polar(1.0, t[2])});
  return mul(mul(v, d), dagger(v));
}

ScatteringMatrix s_matrix(const JunctionParams& p, double k, double xi, Orientation orientation) {
  require_positive_k(k);
  const bool inward = orientation == Orientation::Inward;
  std::array<Complex, 3> s0{};
  for (std::size_t i = 0; i < 3; ++i) {
    const double half = p.theta()[i] / 2.0;
    const Complex ikl = kI * (k * p.L0() * std::cos(half));
    const double s = std::sin(half);
    s0[i] = inward ? (ikl + s) / (ikl - s) : (ikl - s) / (ikl + s);
  }
  const Mat3 v = build_V(p);
  const Complex phase = std::polar(1.0, (inward ? 2.0 : -2.0) * k * xi);
  return {phase * mul(mul(v, Mat3::diagonal(s0)), dagger(v)), k, xi, orientation};
}

double junction_residual(const Mat3& U, double L0, double k, double xi, const Vec3& phi,
                         const Vec3& psi, Orientation orientation) {
  // Outward axes are the inward formulas with k -> -k.
  const double ks = orientation == Orientation::Inward ? k : -k;
  const Complex in_phase = std::polar(1.0, ks * xi);
  const Complex out_phase = std::polar(1.0, -ks * xi);
  const Vec3 value = in_phase * phi + out_phase * psi;
  const Vec3 slope = (kI * ks) * (in_phase * phi - out_phase * psi);
  const Mat3 id = Mat3::identity();
  const Vec3 r = mul(U - id, value) + (kI * L0) * mul(U + id, slope);
  return max_norm(r);
}

RealMat3 probabilities(const ScatteringMatrix& S) {
  RealMat3 p{};
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) p[j][i] = std::norm(S.m(j, i));
  return p;
}

bool is_time_reversal(const JunctionParams& p, double tol) {
  const Mat3 u = build_U(p);
  return max_norm(u - transpose(u)) <= tol;
}

bool is_scale_invariant(const JunctionParams& p, double tol) {
  for (double t : p.theta())
    if (angle_distance(t, 0.0) > tol && angle_distance(t, std::numbers::pi) > tol) return false;
  return true;
}

Mat3 buttiker_matrix(double b) {
  const double c = std::cos(2.0 * b);
  const double t = std::sin(2.0 * b) / std::sqrt(2.0);
  Mat3 m;
  m(0, 0) = -c;
  m(0, 1) = t;
  m(0, 2) = t;
  m(1, 0) = t;
  m(1, 1) = 0.5 * (c - 1.0);
  m(1, 2) = 0.5 * (c + 1.0);
  m(2, 0) = t;
  m(2, 1) = 0.5 * (c + 1.0);
  m(2, 2) = 0.5 * (c - 1.0);
  return m;
}

JunctionParams buttiker_params(double b, double L0) {
  constexpr double pi = std::numbers::pi;
  return JunctionParams({0.0, pi, pi}, {0.0, 1.5 * pi, pi, 0.25 * pi, 0.0, b}, L0);
}

JunctionParams gauge_shift(const JunctionParams& p, double new_L0) {
  if (!std::isfinite(new_L0) || !(new_L0 > 0.0))
    throw std::invalid_argument("gauge_shift: new L0 must be positive and finite, got " +
                                std::to_string(new_L0));
  std::array<double, 3> theta{};
  for (std::size_t i = 0; i < 3; ++i) {
    const double half = p.theta()[i] / 2.0;
    // half in [0, pi) so sin >= 0 and the result stays in [0, 2 pi].
    theta[i] = 2.0 * std::atan2(new_L0 * std::sin(half), p.L0() * std::cos(half));
  }
  return JunctionParams(theta, p.euler(), new_L0);
}

}  // namespace yjunction
