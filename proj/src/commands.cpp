#include "yjunction/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>
#include <string>

#include "yjunction/errors.hpp"

namespace yjunction {

namespace {

constexpr double kDefaultKMin = 0.1;
constexpr double kDefaultKMax = 20.0;

const RingConfig& require_ring(const Config& cfg) {
  if (!cfg.ring) throw ConfigError("missing field 'ring' (required by this command)");
  return *cfg.ring;
}

double require_k(const std::optional<double>& k) {
  if (!k) throw ConfigError("missing field 'task.k' (or --k)");
  if (!(*k > 0.0)) throw ConfigError("field 'task.k' must be positive");
  return *k;
}

std::pair<double, double> require_range(const Task& t) {
  if (!t.k_min) throw ConfigError("missing field 'task.k_min' (or --k-min)");
  if (!t.k_max) throw ConfigError("missing field 'task.k_max' (or --k-max)");
  if (!(*t.k_min > 0.0)) throw ConfigError("field 'task.k_min' must be positive");
  if (!(*t.k_max > *t.k_min)) throw ConfigError("field 'task.k_max' must exceed 'task.k_min'");
  return {*t.k_min, *t.k_max};
}

std::string complex_text(Complex z) { return format_double(z.real()) + " " + format_double(z.imag()); }

const char* mode_name(const SymmetryMode& mode) {
  switch (mode.index()) {
    case 0:
      return "symmetric";
    case 1:
      return "antisymmetric";
    default:
      return "general";
  }
}

const char* kind_name(ResonanceKind kind) {
  return kind == ResonanceKind::PerfectTransmission ? "transmission" : "reflection";
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(const Spectrum& spectrum, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const SpectrumPoint& p : spectrum.points) {
    out << format_double(p.k);
    for (Complex z : p.amps.as_array()) out << ',' << format_double(std::norm(z));
    out << ',' << format_double(p.amps.A.real()) << ',' << format_double(p.amps.A.imag()) << ','
        << format_double(p.amps.F.real()) << ',' << format_double(p.amps.F.imag()) << ','
        << (p.degenerate() ? 1 : 0) << '\n';
  }
}

int cmd_junction(const Config& cfg, std::ostream& out, std::ostream&) {
  const Task& t = cfg.task;
  std::string name;
  if (t.junction)
    name = *t.junction;
  else
    name = cfg.junctions.front().first;
  const JunctionParams& p = cfg.junction(name);
  const double k = require_k(t.k);
  const double xi = t.xi.value_or(0.0);
  const Orientation orientation = t.orientation.value_or(Orientation::Inward);

  const ScatteringMatrix S = s_matrix(p, k, xi, orientation);
  const RealMat3 prob = probabilities(S);

  out << "junction " << name << "  k = " << format_double(k) << "  xi = " << format_double(xi)
      << "  orientation = " << (orientation == Orientation::Inward ? "in" : "out") << '\n';
  out << "S-matrix (re im):\n";
  for (std::size_t r = 0; r < 3; ++r) {
    out << " ";
    for (std::size_t c = 0; c < 3; ++c) out << "  " << complex_text(S.m(r, c));
    out << '\n';
  }
  out << "P(i->j) (row i = incoming arm, column j = outgoing arm):\n";
  for (std::size_t i = 0; i < 3; ++i) {
    out << " ";
    for (std::size_t j = 0; j < 3; ++j) out << "  " << format_double(prob[j][i]);
    out << '\n';
  }
  out << "unitarity error: " << format_double(unitarity_error(S.m)) << '\n';
  out << "time-reversal: " << (is_time_reversal(p) ? "true" : "false") << '\n';
  out << "scale-invariant: " << (is_scale_invariant(p) ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_ring(const Config& cfg, std::ostream& out, std::ostream& err) {
  const RingConfig& ring = require_ring(cfg);
  const double k = require_k(cfg.task.k);

  const SpectrumPoint pt = evaluate_point(ring, k);
  if (pt.degeneracy == Degeneracy::Singular) {
    err << "degenerate ring at k = " << format_double(k)
        << ": the internal wires carry a bound state and the amplitudes are not unique\n";
    return kExitDegenerate;
  }

  out << "ring mode = " << mode_name(ring.mode()) << "  xi1 = " << format_double(ring.xi1())
      << "  xi2 = " << format_double(ring.xi2()) << "  k = " << format_double(k) << '\n';
  const char* names = "ABCDEF";
  const auto amps = pt.amps.as_array();
  for (std::size_t i = 0; i < 6; ++i)
    out << names[i] << " = " << complex_text(amps[i]) << "  |" << names[i]
        << "|^2 = " << format_double(std::norm(amps[i])) << '\n';
  out << "|A|^2 = " << format_double(pt.p_refl) << '\n';
  out << "|F|^2 = " << format_double(pt.p_trans) << '\n';
  out << "|A|^2 + |F|^2 = " << format_double(pt.p_refl + pt.p_trans) << '\n';
  if (pt.degeneracy == Degeneracy::Trivial) out << "note: trivially decoupled ring\n";

  const auto [s1, s2] = ring_matrices(ring, k);
  try {
    const RingAmplitudes alg = solve_algebraic(s1, s2);
    out << "algebraic cross-check: max |diff| = " << format_double(max_difference(pt.amps, alg))
        << '\n';
  } catch (const DegenerateRingError&) {
    out << "algebraic cross-check: unavailable (Delta vanishes on this resonance)\n";
  }
  return kExitOk;
}

int cmd_sweep(const Config& cfg, std::ostream& out, std::ostream&) {
  const RingConfig& ring = require_ring(cfg);
  const auto [k_min, k_max] = require_range(cfg.task);
  if (!cfg.task.n) throw ConfigError("missing field 'task.n' (or --n)");
  if (*cfg.task.n < 2) throw ConfigError("field 'task.n' must be at least 2");
  write_csv(sweep(ring, k_min, k_max, *cfg.task.n), out);
  return kExitOk;
}

int cmd_find(const Config& cfg, std::ostream& out, std::ostream& err) {
  const RingConfig& ring = require_ring(cfg);
  const auto [k_min, k_max] = require_range(cfg.task);
  const ResonanceKind kind = cfg.task.kind.value_or(ResonanceKind::PerfectTransmission);
  const double tol = cfg.task.tol.value_or(1e-8);
  if (!(tol > 0.0)) throw ConfigError("field 'task.tol' must be positive");
  const int scan_n = cfg.task.scan_n.value_or(default_scan_points(k_min, k_max));
  if (scan_n < 3) throw ConfigError("field 'task.scan_n' must be at least 3");

  const ResonanceSearch found = find_resonances(ring, k_min, k_max, kind, scan_n, tol);
  out << "kind,k_star,residual\n";
  for (const Resonance& r : found.resonances)
    out << kind_name(r.kind) << ',' << format_double(r.k_star) << ',' << format_double(r.residual)
        << '\n';
  for (const std::string& w : found.warnings) err << "warning: " << w << '\n';
  return kExitOk;
}

int cmd_check(const Config& cfg, std::ostream& out, std::ostream& err) {
  int failures = 0;
  auto report = [&](bool ok, const std::string& what, double value, double limit) {
    char limit_text[32];
    std::snprintf(limit_text, sizeof limit_text, "%g", limit);
    out << (ok ? "ok   " : "FAIL ") << what << ": " << format_double(value) << " (limit "
        << limit_text << ")\n";
    if (!ok) ++failures;
  };

  // Fixed seed: the check is reproducible run to run.
  std::mt19937_64 rng(20240611);
  const double k_lo = cfg.task.k_min.value_or(kDefaultKMin);
  const double k_hi = cfg.task.k_max.value_or(kDefaultKMax);
  if (!(k_lo > 0.0) || !(k_hi > k_lo)) throw ConfigError("field 'task.k_min'/'task.k_max' invalid");
  std::uniform_real_distribution<double> k_dist(k_lo, k_hi);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto random_vec = [&] {
    Vec3 v;
    for (std::size_t i = 0; i < 3; ++i) v[i] = Complex(unit(rng), unit(rng));
    return v;
  };

  constexpr int kSamples = 16;
  for (const auto& [name, p] : cfg.junctions) {
    const Mat3 u = build_U(p);
    double s_unit = 0.0;
    double resid = 0.0;
    for (int i = 0; i < kSamples; ++i) {
      const double k = k_dist(rng);
      for (Orientation o : {Orientation::Inward, Orientation::Outward}) {
        const double xi = unit(rng);
        const ScatteringMatrix S = s_matrix(p, k, xi, o);
        s_unit = std::max(s_unit, unitarity_error(S.m));
        const Vec3 phi = random_vec();
        resid = std::max(resid, junction_residual(u, p.L0(), k, xi, phi, mul(S.m, phi), o));
      }
    }
    report(unitarity_error(u) <= 1e-12, "junction " + name + " unitarity of U",
           unitarity_error(u), 1e-12);
    report(s_unit <= 1e-12, "junction " + name + " unitarity of S (in/out)", s_unit, 1e-12);
    report(resid < 1e-10, "junction " + name + " junction-condition residual", resid, 1e-10);
  }

  if (cfg.ring) {
    const RingConfig& ring = *cfg.ring;
    double agree = 0.0;
    double flux = 0.0;
    double fast = 0.0;
    int solved = 0;
    int attempts = 0;
    const SolverRoute route = choose_route(ring);
    while (solved < kSamples && attempts < 16 * kSamples) {
      ++attempts;
      const double k = k_dist(rng);
      const auto [s1, s2] = ring_matrices(ring, k);
      RingAmplitudes closed, alg;
      try {
        closed = solve_closed_form(s1, s2);
        alg = solve_algebraic(s1, s2);
      } catch (const DegenerateRingError&) {
        continue;  // isolated resonance; draw another k
      }
      SeriesResult series;
      try {
        series = solve_series(s1, s2, 1e-12, 10'000'000);
      } catch (const ConvergenceError& e) {
        err << "series failed to converge at k = " << format_double(k) << ": " << e.what() << '\n';
        return kExitNoConvergence;
      }
      ++solved;
      agree = std::max({agree, max_difference(closed, alg), max_difference(closed, series.amplitudes),
                        max_difference(alg, series.amplitudes)});
      flux = std::max(flux, std::abs(closed.p_refl() + closed.p_trans() - 1.0));
      if (route == SolverRoute::SymmetricFastPath)
        fast = std::max(fast, max_difference(closed, solve_symmetric_scale_invariant(ring, k)));
      else if (route == SolverRoute::AntiSymmetricFastPath)
        fast = std::max(fast, max_difference(closed, solve_antisymmetric_scale_invariant(ring, k)));
    }
    if (solved < kSamples) {
      err << "ring is degenerate at most sampled wavenumbers\n";
      return kExitDegenerate;
    }
    report(agree <= 1e-10, "ring three-way solver agreement", agree, 1e-10);
    report(flux <= 1e-10, "ring flux conservation |A|^2+|F|^2-1", flux, 1e-10);
    if (route != SolverRoute::ClosedForm)
      report(fast <= 1e-10, "ring scale-invariant fast path vs closed form", fast, 1e-10);
  }

  out << (failures == 0 ? "check passed\n" : "check FAILED\n");
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace yjunction
