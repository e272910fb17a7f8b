#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "yjunction/ring.hpp"

namespace yjunction {

enum class Degeneracy {
  None,
  Singular,  ///< the solve raised DegenerateRingError; amplitudes are NaN
  Trivial,   ///< A or F vanishes identically (decoupled arm), no resonance here
};

struct SpectrumPoint {
  double k = 0.0;
  double p_refl = 0.0;
  double p_trans = 0.0;
  RingAmplitudes amps{};
  Degeneracy degeneracy = Degeneracy::None;

  bool degenerate() const { return degeneracy != Degeneracy::None; }
};

struct Spectrum {
  std::vector<SpectrumPoint> points;
  std::uint64_t fingerprint = 0;
};

enum class ResonanceKind { PerfectTransmission, PerfectReflection };

struct Resonance {
  double k_star = 0.0;
  ResonanceKind kind = ResonanceKind::PerfectTransmission;
  double residual = 0.0;  ///< target probability at k_star
};

struct ResonanceSearch {
  std::vector<Resonance> resonances;
  std::vector<std::string> warnings;
};

/// Stable digest of a ring configuration (FNV-1a over its parameters).
std::uint64_t fingerprint(const RingConfig& cfg);

/// Which solver a point is evaluated with.
enum class SolverRoute { SymmetricFastPath, AntiSymmetricFastPath, ClosedForm };

SolverRoute choose_route(const RingConfig& cfg);

/// Solves one wavenumber with the preferred route. Singular solves and
/// identically vanishing amplitudes are reported through `degeneracy`.
SpectrumPoint evaluate_point(const RingConfig& cfg, double k);

/// n uniformly spaced points on [k_min, k_max]. Throws std::invalid_argument
/// unless 0 < k_min < k_max and n >= 2.
Spectrum sweep(const RingConfig& cfg, double k_min, double k_max, int n);

/// Scan-and-refine search for zeros of |A|^2 (PerfectTransmission) or |F|^2
/// (PerfectReflection). Every local minimum of the scan is refined by
/// golden-section search to a bracket narrower than 1e-12 (k_max - k_min);
/// minima whose probability is below tol are reported. Scale-invariant
/// symmetric and anti-symmetric rings are cross-checked against the analytic
/// positions; mismatches become warnings.
ResonanceSearch find_resonances(const RingConfig& cfg, double k_min, double k_max,
                                ResonanceKind kind, int scan_n, double tol);

/// 2048 points per decade of k, at least 2048.
int default_scan_points(double k_min, double k_max);

/// Analytic resonance positions in (k_min, k_max] for scale-invariant
/// symmetric/anti-symmetric rings. `known` is false where no prediction
/// exists (General mode, non scale-invariant nodes).
struct Prediction {
  bool known = false;
  std::vector<double> ks;
};

Prediction predicted_resonances(const RingConfig& cfg, double k_min, double k_max,
                                ResonanceKind kind);

}  // namespace yjunction
