#include "yjunction/ring.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "yjunction/errors.hpp"

namespace yjunction {

namespace {

void require_scale_invariant(const RingConfig& cfg, const char* who) {
  if (!is_scale_invariant(cfg.left()))
    throw std::invalid_argument(std::string(who) +
                                ": left junction is not scale invariant (theta_i must be 0 or pi)");
}

Mat2 block23(const Mat3& m) {
  Mat2 r;
  r(0, 0) = m(1, 1);
  r(0, 1) = m(1, 2);
  r(1, 0) = m(2, 1);
  r(1, 1) = m(2, 2);
  return r;
}

// Assembles the six amplitudes from w = (I + s s~ + ...)(s21, s31)^T.
RingAmplitudes assemble(const SubBlocks& sb, const Vec2& w) {
  const Vec2 tw = mul(sb.s_tilde, w);
  return {sb.s1(0, 0) + dot(sb.left_row(0), tw),
          sb.s1(1, 0) + dot(sb.left_row(1), tw),
          dot(sb.right_row(1), w),
          sb.s1(2, 0) + dot(sb.left_row(2), tw),
          dot(sb.right_row(2), w),
          dot(sb.right_row(0), w)};
}

// Largest l1 norm among the row vectors that multiply w in assemble().
double assembling_scale(const SubBlocks& sb) {
  double m = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    m = std::max(m, l1_norm(mul(sb.left_row(i), sb.s_tilde)));
    m = std::max(m, l1_norm(sb.right_row(i)));
  }
  return m;
}

// Inflow split over the eigenvectors of s s~, v = sum_i c_i u_i. The tail
// after n terms is sum_i c_i lambda_i^(n+1) / (1 - lambda_i) u_i, so its norm
// is at most sum_i weight_i * modulus_i^n.
struct TailModel {
  bool valid = false;
  std::array<double, 2> modulus{};
  std::array<double, 2> weight{};
};

TailModel tail_model(const Mat2& m, const Vec2& v) {
  TailModel model;
  // lambda = mean +- q with q^2 = h^2 + m01 m10; no cancellation against the
  // trace when the eigenvalues are close.
  const Complex mean = (m(0, 0) + m(1, 1)) / 2.0;
  const Complex h = (m(0, 0) - m(1, 1)) / 2.0;
  const Complex q = std::sqrt(h * h + m(0, 1) * m(1, 0));
  const Complex disc = 2.0 * q;
  const std::array<Complex, 2> lambda{mean + q, mean - q};
  // Nearly defective: the split is ill-conditioned, use the ratio rule.
  if (std::abs(disc) <= 1e-6 * std::max(1.0, max_norm(m))) return model;

  std::array<Vec2, 2> u;
  for (std::size_t i = 0; i < 2; ++i) {
    const Complex root = i == 0 ? q : -q;
    // (m - lambda) u = 0 from either row; lambda - m00 = root - h.
    const Vec2 a{{m(0, 1), root - h}};
    const Vec2 b{{root + h, m(1, 0)}};
    u[i] = max_norm(a) >= max_norm(b) ? a : b;
    const double n = max_norm(u[i]);
    if (n == 0.0) return model;
    u[i] = (1.0 / n) * u[i];
  }
  const Complex det = u[0][0] * u[1][1] - u[1][0] * u[0][1];
  if (std::abs(det) < 1e-8) return model;
  const std::array<Complex, 2> c{(v[0] * u[1][1] - u[1][0] * v[1]) / det,
                                 (u[0][0] * v[1] - v[0] * u[0][1]) / det};
  // Coefficients this small are indistinguishable from rounding. A symmetric
  // ring always has such a component on its unit-modulus mode; counting it
  // would make the bound stall although the exact series converges.
  // Close eigenvalues are computed only to about eps |m| / |disc|.
  const double spread = std::max(1.0, max_norm(m) / std::abs(disc));
  const double eig_error = 64.0 * std::numeric_limits<double>::epsilon() * spread;
  const double noise = eig_error * max_norm(v) / std::abs(det);
  for (std::size_t i = 0; i < 2; ++i) {
    const double gap = std::abs(1.0 - lambda[i]);
    model.modulus[i] = std::abs(lambda[i]);
    if (model.modulus[i] > 1.0 - eig_error && std::abs(c[i]) <= noise) continue;
    model.weight[i] = gap > 0.0 ? std::abs(c[i]) * model.modulus[i] / gap
                                : (c[i] == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  }
  model.valid = true;
  return model;
}

}  // namespace

RingConfig::RingConfig(JunctionParams left, SymmetryMode mode, double xi1, double xi2)
    : left_(std::move(left)), mode_(std::move(mode)), xi1_(xi1), xi2_(xi2) {
  if (!std::isfinite(xi1) || !std::isfinite(xi2))
    throw std::invalid_argument("ring node positions must be finite");
  if (!(xi1 > xi2))
    throw std::invalid_argument("ring requires xi1 > xi2, got xi1 = " + std::to_string(xi1) +
                                ", xi2 = " + std::to_string(xi2));
}

double max_difference(const RingAmplitudes& x, const RingAmplitudes& y) {
  const auto a = x.as_array();
  const auto b = y.as_array();
  double m = 0.0;
  for (std::size_t i = 0; i < 6; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

SubBlocks sub_blocks(const ScatteringMatrix& S1, const ScatteringMatrix& S2eff) {
  return {S1.m, S2eff.m, block23(S1.m), block23(S2eff.m)};
}

Mat3 arm_swap() {
  Mat3 p;
  p(0, 0) = 1.0;
  p(1, 2) = 1.0;
  p(2, 1) = 1.0;
  return p;
}

std::pair<ScatteringMatrix, ScatteringMatrix> ring_matrices(const RingConfig& cfg, double k) {
  ScatteringMatrix s1 = s_matrix(cfg.left(), k, cfg.xi1(), Orientation::Inward);
  ScatteringMatrix s2 = std::visit(
      [&](const auto& mode) -> ScatteringMatrix {
        using M = std::decay_t<decltype(mode)>;
        if constexpr (std::is_same_v<M, General>) {
          return s_matrix(mode.right, k, cfg.xi2(), Orientation::Outward);
        } else {
          ScatteringMatrix s = s_matrix(cfg.left(), k, cfg.xi2(), Orientation::Outward);
          if constexpr (std::is_same_v<M, AntiSymmetric>) {
            // P is its own inverse.
            const Mat3 p = arm_swap();
            s.m = mul(mul(p, s.m), p);
          }
          return s;
        }
      },
      cfg.mode());
  return {s1, s2};
}

RingAmplitudes solve_closed_form(const ScatteringMatrix& S1, const ScatteringMatrix& S2eff) {
  const SubBlocks sb = sub_blocks(S1, S2eff);
  Mat2 resolvent;
  try {
    resolvent = inverse2(Mat2::identity() - mul(sb.s, sb.s_tilde));
  } catch (const SingularMatrixError& e) {
    throw DegenerateRingError(std::string("closed form: I - s s~ is singular at k = ") +
                              std::to_string(S1.k) + " (" + e.what() + ")");
  }
  return assemble(sb, mul(resolvent, sb.inflow()));
}

SeriesResult solve_series(const ScatteringMatrix& S1, const ScatteringMatrix& S2eff, double tol,
                          int max_terms) {
  if (!(tol > 0.0)) throw std::invalid_argument("solve_series: tol must be positive");
  if (max_terms < 1) throw std::invalid_argument("solve_series: max_terms must be >= 1");

  const SubBlocks sb = sub_blocks(S1, S2eff);
  const Mat2 bounce = mul(sb.s, sb.s_tilde);
  const double scale = std::max(1.0, assembling_scale(sb));

  const TailModel model = tail_model(bounce, sb.inflow());

  Vec2 term = sb.inflow();
  Vec2 sum;
  double prev_ratio = 0.0;
  double bound = std::numeric_limits<double>::infinity();
  int terms = 0;
  while (terms < max_terms) {
    sum = sum + term;
    ++terms;
    const Vec2 next = mul(bounce, term);
    if (model.valid) {
      bound = 0.0;
      for (std::size_t i = 0; i < 2; ++i)
        bound += model.weight[i] * std::pow(model.modulus[i], terms);
      bound *= scale;
    } else {
      const double next_norm = max_norm(next);
      if (next_norm == 0.0) {
        bound = 0.0;
        break;
      }
      // Contraction estimated from the last two steps; a non-normal s s~ can
      // shrink one step and stretch the next.
      const double ratio = next_norm / max_norm(term);
      const double rho = terms == 1 ? ratio : std::max(ratio, prev_ratio);
      prev_ratio = ratio;
      bound = rho < 1.0 ? scale * next_norm / (1.0 - rho) : std::numeric_limits<double>::infinity();
      // Terms at the rounding level of amplitudes of order one, e.g. an
      // inflow that is zero up to rounding.
      if (scale * next_norm <= 64.0 * std::numeric_limits<double>::epsilon() &&
          scale * max_norm(sum) <= 1.0)
        bound = std::min(bound, scale * next_norm);
    }
    if (bound < tol) break;
    term = next;
  }

  SeriesResult result{assemble(sb, sum), terms, bound};
  if (!(bound < tol))
    throw ConvergenceError("series did not converge within " + std::to_string(max_terms) +
                               " terms (residual bound " + std::to_string(bound) + ")",
                           result);
  return result;
}

RingAmplitudes solve_algebraic(const ScatteringMatrix& S1, const ScatteringMatrix& S2eff) {
  // 1-based accessors to keep the index bookkeeping readable.
  auto s = [&](int i, int j) { return S1.m(i - 1, j - 1); };
  auto t = [&](int i, int j) { return S2eff.m(i - 1, j - 1); };
  auto a = [&](int i, int j) { return s(2, i) * t(j, 2) + s(3, i) * t(j, 3); };
  auto b = [&](int i, int j) { return t(2, i) * s(j, 2) + t(3, i) * s(j, 3); };

  const Complex delta = (1.0 - a(2, 2)) * (1.0 - a(3, 3)) - a(2, 3) * a(3, 2);
  const Complex delta_b = (1.0 - b(2, 2)) * (1.0 - b(3, 3)) - b(2, 3) * b(3, 2);
  if (std::abs(delta) < 1e-13)
    throw DegenerateRingError("algebraic solve: Delta vanishes at k = " + std::to_string(S1.k));
  if (std::abs(delta - delta_b) > 1e-12)
    throw std::logic_error("algebraic solve: the two expressions of Delta disagree by " +
                           std::to_string(std::abs(delta - delta_b)));

  const Complex c_num = a(1, 2) * (1.0 - a(3, 3)) + a(1, 3) * a(3, 2);
  const Complex e_num = a(1, 3) * (1.0 - a(2, 2)) + a(1, 2) * a(2, 3);
  const Complex b_num = s(3, 1) * b(3, 2) + s(2, 1) * (1.0 - b(3, 3));
  const Complex d_num = s(2, 1) * b(2, 3) + s(3, 1) * (1.0 - b(2, 2));

  return {s(1, 1) + (s(1, 2) * c_num + s(1, 3) * e_num) / delta,
          b_num / delta,
          c_num / delta,
          d_num / delta,
          e_num / delta,
          (t(1, 2) * b_num + t(1, 3) * d_num) / delta};
}

RingAmplitudes solve_symmetric_scale_invariant(const RingConfig& cfg, double k) {
  if (!cfg.is_symmetric())
    throw std::invalid_argument("solve_symmetric_scale_invariant: ring is not symmetric");
  require_scale_invariant(cfg, "solve_symmetric_scale_invariant");

  const Mat3 s = s_matrix(cfg.left(), k, cfg.xi1(), Orientation::Inward).m;
  const Complex e = std::polar(1.0, 2.0 * k * cfg.delta_xi());
  const double r = std::norm(s(0, 0));
  const Complex den = 1.0 - e * r;
  // |den| >= 1 - |s11|^2; only the decoupled node |s11| = 1 reaches zero.
  if (std::abs(den) < 1e-13)
    throw DegenerateRingError("symmetric ring: decoupled node resonates with the ring");

  return {(1.0 - e) * s(0, 0) / den,
          s(1, 0) / den,
          -e * s(0, 0) * std::conj(s(0, 1)) / den,
          s(2, 0) / den,
          -e * s(0, 0) * std::conj(s(0, 2)) / den,
          e * (1.0 - r) / den};
}

namespace {

Complex cross_term(const Mat3& s) {
  return s(1, 1) * std::conj(s(2, 2)) + s(1, 2) * std::conj(s(2, 1)) +
         s(2, 1) * std::conj(s(1, 2)) + s(2, 2) * std::conj(s(1, 1));
}

Complex lambda_term(const Mat3& s, Complex cross) {
  return -s(0, 0) * cross +
         s(0, 1) * (std::conj(s(2, 2)) * s(1, 0) + std::conj(s(1, 2)) * s(2, 0)) +
         s(0, 2) * (std::conj(s(2, 1)) * s(1, 0) + std::conj(s(1, 1)) * s(2, 0));
}

}  // namespace

AntiSymmetricTerms antisymmetric_terms(const JunctionParams& left) {
  // Scale-invariant S-matrices do not depend on k; xi = 0 strips the phase.
  const Mat3 s = s_matrix(left, 1.0, 0.0, Orientation::Inward).m;
  const Complex cross = cross_term(s);
  return {s, cross, lambda_term(s, cross)};
}

RingAmplitudes solve_antisymmetric_scale_invariant(const RingConfig& cfg, double k) {
  if (!cfg.is_antisymmetric())
    throw std::invalid_argument("solve_antisymmetric_scale_invariant: ring is not anti-symmetric");
  require_scale_invariant(cfg, "solve_antisymmetric_scale_invariant");

  const Mat3 s = s_matrix(cfg.left(), k, cfg.xi1(), Orientation::Inward).m;
  const Complex e = std::polar(1.0, 2.0 * k * cfg.delta_xi());
  const Complex cross = cross_term(s);
  const Complex lambda = lambda_term(s, cross);
  const Complex den = 1.0 - e * cross + std::norm(s(0, 0)) * e * e;
  if (std::abs(den) < 1e-13)
    throw DegenerateRingError("anti-symmetric ring: denominator vanishes at k = " +
                              std::to_string(k));

  auto cj = [](Complex z) { return std::conj(z); };
  const Complex into2 = cj(s(2, 2)) * s(1, 0) + cj(s(1, 2)) * s(2, 0);
  const Complex into3 = cj(s(2, 1)) * s(1, 0) + cj(s(1, 1)) * s(2, 0);

  const Complex A = (s(0, 0) + s(0, 0) * e * e + e * lambda) / den;
  const Complex B = (s(1, 0) + e * (-s(1, 0) * (s(2, 1) * cj(s(1, 2)) + s(2, 2) * cj(s(1, 1))) +
                                    s(2, 0) * (s(1, 1) * cj(s(1, 2)) + cj(s(1, 1)) * s(1, 2)))) /
                    den;
  // Carries the same e^{2ik dxi} prefactor as E.
  const Complex C = e * (into2 + s(0, 0) * cj(s(0, 1)) * e) / den;
  const Complex D = (s(2, 0) + e * (-s(2, 0) * (s(1, 1) * cj(s(2, 2)) + s(1, 2) * cj(s(2, 1))) +
                                    s(1, 0) * (s(2, 1) * cj(s(2, 2)) + s(2, 2) * cj(s(2, 1))))) /
                    den;
  const Complex E = e * (into3 + s(0, 0) * cj(s(0, 2)) * e) / den;
  const Complex F = e * (cj(s(2, 0)) * s(1, 0) + cj(s(1, 0)) * s(2, 0)) * (1.0 - e) / den;
  return {A, B, C, D, E, F};
}

TransmissionTarget perfect_transmission_target(const RingConfig& cfg) {
  if (!cfg.is_antisymmetric())
    throw std::invalid_argument("perfect_transmission_target: ring is not anti-symmetric");
  require_scale_invariant(cfg, "perfect_transmission_target");

  const AntiSymmetricTerms terms = antisymmetric_terms(cfg.left());
  const Complex s11 = terms.s(0, 0);
  if (std::abs(s11) < 1e-13) return {TargetStatus::Degenerate, 0.0, 0.0};

  const Complex ratio = -terms.lambda / (2.0 * s11);
  TransmissionTarget t{TargetStatus::Found, ratio.real(), ratio.imag()};
  if (std::abs(ratio.imag()) > 1e-10 * std::max(1.0, std::abs(ratio.real())))
    t.status = TargetStatus::NotReal;
  else if (std::abs(ratio.real()) > 1.0)
    t.status = TargetStatus::OutOfRange;
  return t;
}

std::vector<double> wavenumbers_for_cosine(double c, double delta_xi, double k_min, double k_max) {
  std::vector<double> ks;
  if (!(delta_xi > 0.0) || std::abs(c) > 1.0) return ks;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double phi = std::acos(c);
  // 2 k dxi = +-phi + 2 pi n
  const double scale = 2.0 * delta_xi;
  const long n_lo = static_cast<long>(std::floor(k_min * scale / two_pi)) - 1;
  const long n_hi = static_cast<long>(std::ceil(k_max * scale / two_pi)) + 1;
  for (long n = n_lo; n <= n_hi; ++n) {
    for (double sgn : {-1.0, 1.0}) {
      const double k = (sgn * phi + two_pi * static_cast<double>(n)) / scale;
      if (k > k_min && k <= k_max) ks.push_back(k);
    }
  }
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end(),
                       [](double x, double y) { return std::abs(x - y) <= 1e-14 * std::abs(y); }),
           ks.end());
  return ks;
}

}  // namespace yjunction
