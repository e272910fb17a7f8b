#include "yjunction/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "yjunction/errors.hpp"

namespace yjunction {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kTrivialTol = 1e-12;

class Fnv1a {
public:
  void add(double x) {
    const auto bits = std::bit_cast<std::uint64_t>(x);
    for (int i = 0; i < 8; ++i) {
      hash_ ^= (bits >> (8 * i)) & 0xffu;
      hash_ *= 0x100000001b3ull;
    }
  }
  void add(const JunctionParams& p) {
    for (double t : p.theta()) add(t);
    const EulerAngles& e = p.euler();
    for (double x : {e.alpha, e.beta, e.gamma, e.delta, e.a, e.b, p.L0()}) add(x);
  }
  std::uint64_t value() const { return hash_; }

private:
  std::uint64_t hash_ = 0xcbf29ce484222325ull;
};

// Identically vanishing amplitudes of scale-invariant symmetric or
// anti-symmetric rings: the paper's "trivial cases".
struct TrivialFlags {
  bool a_zero = false;
  bool f_zero = false;
};

TrivialFlags trivial_flags(const RingConfig& cfg) {
  TrivialFlags f;
  if (!is_scale_invariant(cfg.left())) return f;
  if (cfg.is_symmetric()) {
    const Mat3 s = s_matrix(cfg.left(), 1.0, 0.0, Orientation::Inward).m;
    f.a_zero = std::abs(s(0, 0)) < kTrivialTol;
    f.f_zero = 1.0 - std::norm(s(0, 0)) < kTrivialTol;
  } else if (cfg.is_antisymmetric()) {
    const AntiSymmetricTerms t = antisymmetric_terms(cfg.left());
    const Complex pre =
        std::conj(t.s(2, 0)) * t.s(1, 0) + std::conj(t.s(1, 0)) * t.s(2, 0);
    f.f_zero = std::abs(pre) < kTrivialTol;
    f.a_zero = std::abs(t.s(0, 0)) < kTrivialTol && std::abs(t.lambda) < kTrivialTol;
  }
  return f;
}

RingAmplitudes solve_route(const RingConfig& cfg, SolverRoute route, double k) {
  switch (route) {
    case SolverRoute::SymmetricFastPath:
      return solve_symmetric_scale_invariant(cfg, k);
    case SolverRoute::AntiSymmetricFastPath:
      return solve_antisymmetric_scale_invariant(cfg, k);
    case SolverRoute::ClosedForm:
      break;
  }
  const auto [s1, s2] = ring_matrices(cfg, k);
  return solve_closed_form(s1, s2);
}

void require_range(double k_min, double k_max) {
  if (!(k_min > 0.0) || !(k_max > k_min) || !std::isfinite(k_max))
    throw std::invalid_argument("wavenumber range requires 0 < k_min < k_max");
}

double target_of(const SpectrumPoint& p, ResonanceKind kind) {
  return kind == ResonanceKind::PerfectTransmission ? p.p_refl : p.p_trans;
}

}  // namespace

std::uint64_t fingerprint(const RingConfig& cfg) {
  Fnv1a h;
  h.add(cfg.left());
  h.add(static_cast<double>(cfg.mode().index()));
  if (const auto* g = std::get_if<General>(&cfg.mode())) h.add(g->right);
  h.add(cfg.xi1());
  h.add(cfg.xi2());
  return h.value();
}

SolverRoute choose_route(const RingConfig& cfg) {
  if (is_scale_invariant(cfg.left())) {
    if (cfg.is_symmetric()) return SolverRoute::SymmetricFastPath;
    if (cfg.is_antisymmetric()) return SolverRoute::AntiSymmetricFastPath;
  }
  return SolverRoute::ClosedForm;
}

SpectrumPoint evaluate_point(const RingConfig& cfg, double k) {
  SpectrumPoint pt;
  pt.k = k;
  const SolverRoute route = choose_route(cfg);
  try {
    pt.amps = solve_route(cfg, route, k);
  } catch (const DegenerateRingError&) {
    pt.amps = {kNaN, kNaN, kNaN, kNaN, kNaN, kNaN};
    pt.p_refl = kNaN;
    pt.p_trans = kNaN;
    pt.degeneracy = Degeneracy::Singular;
    return pt;
  }
  pt.p_refl = pt.amps.p_refl();
  pt.p_trans = pt.amps.p_trans();

#ifndef NDEBUG
  if (route != SolverRoute::ClosedForm) {
    // The general resolvent is singular on symmetric resonances and loses
    // accuracy close to them; compare only where it is well conditioned.
    const auto [s1, s2] = ring_matrices(cfg, k);
    const SubBlocks sb = sub_blocks(s1, s2);
    if (std::abs(det2(Mat2::identity() - mul(sb.s, sb.s_tilde))) > 1e-6)
      assert(max_difference(pt.amps, solve_closed_form(s1, s2)) < 1e-8);
  }
#endif

  const TrivialFlags trivial = trivial_flags(cfg);
  bool decoupled = trivial.a_zero || trivial.f_zero;
  if (!decoupled) {
    const auto [s1, s2] = ring_matrices(cfg, k);
    const SubBlocks sb = sub_blocks(s1, s2);
    decoupled = max_norm(sb.inflow()) < kTrivialTol || max_norm(sb.right_row(0)) < kTrivialTol;
  }
  if (decoupled) pt.degeneracy = Degeneracy::Trivial;
  return pt;
}

Spectrum sweep(const RingConfig& cfg, double k_min, double k_max, int n) {
  require_range(k_min, k_max);
  if (n < 2) throw std::invalid_argument("sweep requires n >= 2");
  Spectrum spec;
  spec.fingerprint = fingerprint(cfg);
  spec.points.reserve(static_cast<std::size_t>(n));
  const double step = (k_max - k_min) / static_cast<double>(n - 1);
  for (int i = 0; i < n; ++i) {
    const double k = i == n - 1 ? k_max : k_min + step * static_cast<double>(i);
    spec.points.push_back(evaluate_point(cfg, k));
  }
  return spec;
}

int default_scan_points(double k_min, double k_max) {
  require_range(k_min, k_max);
  const double decades = std::max(1.0, std::log10(k_max / k_min));
  return static_cast<int>(std::ceil(2048.0 * decades));
}

Prediction predicted_resonances(const RingConfig& cfg, double k_min, double k_max,
                                ResonanceKind kind) {
  Prediction pred;
  const SolverRoute route = choose_route(cfg);
  if (route == SolverRoute::ClosedForm) return pred;
  const TrivialFlags trivial = trivial_flags(cfg);
  const double dxi = cfg.delta_xi();

  // e^{2ik dxi} = 1, i.e. k = n pi / dxi.
  auto lattice = [&] { return wavenumbers_for_cosine(1.0, dxi, k_min, k_max); };

  pred.known = true;
  if (route == SolverRoute::SymmetricFastPath) {
    if (kind == ResonanceKind::PerfectTransmission && !trivial.a_zero) pred.ks = lattice();
    // Perfect reflection only in the trivial decoupled case.
    return pred;
  }
  if (kind == ResonanceKind::PerfectReflection) {
    if (!trivial.f_zero) pred.ks = lattice();
    return pred;
  }
  if (trivial.a_zero) return pred;
  const TransmissionTarget target = perfect_transmission_target(cfg);
  if (target.status == TargetStatus::Found)
    pred.ks = wavenumbers_for_cosine(target.value, dxi, k_min, k_max);
  else if (target.status != TargetStatus::OutOfRange)
    pred.known = false;
  return pred;
}

ResonanceSearch find_resonances(const RingConfig& cfg, double k_min, double k_max,
                                ResonanceKind kind, int scan_n, double tol) {
  require_range(k_min, k_max);
  if (scan_n < 3) throw std::invalid_argument("find_resonances requires scan_n >= 3");
  if (!(tol > 0.0)) throw std::invalid_argument("find_resonances requires tol > 0");

  const Spectrum scan = sweep(cfg, k_min, k_max, scan_n);
  const std::size_t n = scan.points.size();

  // Objective for refinement. Singular points (a symmetric ring exactly on
  // resonance through the general resolvent) are evaluated a hair away.
  auto objective = [&](double k) {
    SpectrumPoint p = evaluate_point(cfg, k);
    for (double nudge : {1e-13, -1e-13, 1e-11, -1e-11}) {
      if (p.degeneracy != Degeneracy::Singular) break;
      p = evaluate_point(cfg, k * (1.0 + nudge));
    }
    return p.degeneracy == Degeneracy::Singular ? std::numeric_limits<double>::infinity()
                                                : target_of(p, kind);
  };

  std::vector<double> values(n);
  std::vector<bool> usable(n);
  for (std::size_t i = 0; i < n; ++i) {
    const SpectrumPoint& p = scan.points[i];
    usable[i] = p.degeneracy != Degeneracy::Trivial;
    values[i] = p.degeneracy == Degeneracy::Singular ? objective(p.k) : target_of(p, kind);
  }

  ResonanceSearch out;
  const double width_goal = 1e-12 * (k_max - k_min);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!usable[i - 1] || !usable[i] || !usable[i + 1]) continue;
    if (!(values[i] <= values[i - 1] && values[i] < values[i + 1])) continue;

    double lo = scan.points[i - 1].k;
    double hi = scan.points[i + 1].k;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = objective(x1);
    double f2 = objective(x2);
    while (hi - lo > width_goal) {
      if (f1 <= f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - inv_phi * (hi - lo);
        f1 = objective(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + inv_phi * (hi - lo);
        f2 = objective(x2);
      }
    }
    const double k_star = f1 <= f2 ? x1 : x2;
    const double residual = std::min(f1, f2);
    if (!(residual < tol)) continue;
    if (!out.resonances.empty() &&
        std::abs(out.resonances.back().k_star - k_star) <= 1e-9 * k_star)
      continue;
    out.resonances.push_back({k_star, kind, std::max(0.0, residual)});
  }

  const Prediction pred = predicted_resonances(cfg, k_min, k_max, kind);
  if (pred.known) {
    auto near = [](double x, double y) { return std::abs(x - y) <= 1e-9 * std::abs(y); };
    for (double k : pred.ks) {
      // Predictions at the very edge of the range cannot be bracketed.
      if (k - k_min < 1e-9 * k || k_max - k < 1e-9 * k) continue;
      const bool found = std::any_of(out.resonances.begin(), out.resonances.end(),
                                     [&](const Resonance& r) { return near(r.k_star, k); });
      if (!found) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "predicted resonance at k = " << k
            << " was not recovered; scan_n may be too coarse to bracket it";
        out.warnings.push_back(msg.str());
      }
    }
    for (const Resonance& r : out.resonances) {
      const bool expected =
          std::any_of(pred.ks.begin(), pred.ks.end(), [&](double k) { return near(r.k_star, k); });
      if (!expected) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "resonance at k = " << r.k_star << " does not match any analytic prediction";
        out.warnings.push_back(msg.str());
      }
    }
  }
  return out;
}

}  // namespace yjunction
