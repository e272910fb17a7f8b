#pragma once

// Double Y-junction ring. The left node (inward axes x1, x2, x3) sits at
// xi1, the right node (outward axes x2, x3, x4) at xi2 < xi1. A unit wave
// enters on x1; the stationary state is
//
//   x1: e^{ikx} + A e^{-ikx}   x2: B e^{-ikx} + C e^{ikx}
//   x3: D e^{-ikx} + E e^{ikx} x4: F e^{ikx}
//
// with (A, B, D) = S1 (1, C, E) and (F, C, E) = S2 (0, B, D).

#include <stdexcept>
#include <string>
#include <vector>
#include <utility>
#include <variant>

#include "yjunction/junction.hpp"

namespace yjunction {

struct Symmetric {};
struct AntiSymmetric {};
struct General {
  JunctionParams right;
};

/// How the right node relates to the left one. AntiSymmetric swaps arms 2
/// and 3 of the right node (P S2 P^-1).
using SymmetryMode = std::variant<Symmetric, AntiSymmetric, General>;

class RingConfig {
public:
  /// Throws std::invalid_argument unless xi1 > xi2 (both finite).
  RingConfig(JunctionParams left, SymmetryMode mode, double xi1, double xi2);

  const JunctionParams& left() const { return left_; }
  const SymmetryMode& mode() const { return mode_; }
  double xi1() const { return xi1_; }
  double xi2() const { return xi2_; }
  double delta_xi() const { return xi1_ - xi2_; }

  bool is_symmetric() const { return std::holds_alternative<Symmetric>(mode_); }
  bool is_antisymmetric() const { return std::holds_alternative<AntiSymmetric>(mode_); }

private:
  JunctionParams left_;
  SymmetryMode mode_;
  double xi1_;
  double xi2_;
};

struct RingAmplitudes {
  Complex A, B, C, D, E, F;

  double p_refl() const { return std::norm(A); }
  double p_trans() const { return std::norm(F); }
  std::array<Complex, 6> as_array() const { return {A, B, C, D, E, F}; }
};

/// Largest modulus difference over the six amplitudes.
double max_difference(const RingAmplitudes& x, const RingAmplitudes& y);

/// Components of S1 (s_ij) and of the effective right matrix (s~_ij), with
/// the internal 2x2 blocks s and s~ over arms 2 and 3. Indices are 0-based:
/// s1(0, 0) is s_11.
struct SubBlocks {
  Mat3 s1;
  Mat3 s2;
  Mat2 s;
  Mat2 s_tilde;

  /// (s_21, s_31): amplitude entering the ring from x1.
  Vec2 inflow() const { return {{s1(1, 0), s1(2, 0)}}; }
  /// Row (s_i2, s_i3) of S1, i in 0..2.
  Vec2 left_row(std::size_t i) const { return {{s1(i, 1), s1(i, 2)}}; }
  /// Row (s~_i2, s~_i3) of the right matrix, i in 0..2.
  Vec2 right_row(std::size_t i) const { return {{s2(i, 1), s2(i, 2)}}; }
};

SubBlocks sub_blocks(const ScatteringMatrix& S1, const ScatteringMatrix& S2eff);

/// Permutation swapping arms 2 and 3.
Mat3 arm_swap();

/// S1 = S^(in)(xi1) of the left node and the effective right matrix at xi2:
/// Symmetric -> S^(out)_left(xi2); AntiSymmetric -> P S^(out)_left(xi2) P^-1;
/// General -> S^(out)_right(xi2).
std::pair<ScatteringMatrix, ScatteringMatrix> ring_matrices(const RingConfig& cfg, double k);

/// Resolvent form: A = s11 + (s12, s13) s~ (I - s s~)^-1 (s21, s31)^T and
/// companions. Throws DegenerateRingError when I - s s~ is singular.
RingAmplitudes solve_closed_form(const ScatteringMatrix& S1, const ScatteringMatrix& S2eff);

struct SeriesResult {
  RingAmplitudes amplitudes;
  int terms_used = 0;
  double residual_bound = 0.0;
};

/// The series did not reach tol within max_terms. Carries the partial sum.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, SeriesResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const SeriesResult& partial() const { return partial_; }

private:
  SeriesResult partial_;
};

/// Sum over bounce paths: (I + s s~ + (s s~)^2 + ...) applied to (s21, s31)
/// term by term. Stops once the geometric tail of the remaining terms,
/// scaled by the largest assembling-row norm, is below tol. The tail is
/// bounded per eigen-component of s s~ (2x2, closed form); for a nearly
/// defective s s~ the contraction ratio of the last two terms is used instead.
/// Throws ConvergenceError if max_terms runs out first.
/// Throws std::invalid_argument for tol <= 0 or max_terms < 1.
SeriesResult solve_series(const ScatteringMatrix& S1, const ScatteringMatrix& S2eff, double tol,
                          int max_terms);

/// Explicit elimination of the coupled node relations. Throws
/// DegenerateRingError if |Delta| < 1e-13, std::logic_error if the two
/// expressions of Delta disagree by more than 1e-12.
RingAmplitudes solve_algebraic(const ScatteringMatrix& S1, const ScatteringMatrix& S2eff);

/// Closed forms for a symmetric ring of scale-invariant nodes with common
/// denominator 1 - e^{2ik dxi} |s11|^2. Throws std::invalid_argument if the
/// ring is not symmetric or the node is not scale invariant.
RingAmplitudes solve_symmetric_scale_invariant(const RingConfig& cfg, double k);

/// Closed forms for an anti-symmetric ring of scale-invariant nodes.
/// Throws std::invalid_argument on the wrong mode or a non scale-invariant
/// node, DegenerateRingError when |denominator| < 1e-13.
RingAmplitudes solve_antisymmetric_scale_invariant(const RingConfig& cfg, double k);

/// The pieces of the anti-symmetric closed forms, phase-stripped (S1 taken at
/// xi = 0). lambda is Lambda, cross is s22 s33* + s23 s32* + c.c.
struct AntiSymmetricTerms {
  Mat3 s;
  Complex cross;
  Complex lambda;
};

AntiSymmetricTerms antisymmetric_terms(const JunctionParams& left);

enum class TargetStatus {
  Found,        ///< value holds c* with |c*| <= 1
  OutOfRange,   ///< |Lambda / (2 s11)| > 1: no perfect transmission at any k
  NotReal,      ///< -Lambda / (2 s11) has a nonzero imaginary part
  Degenerate,   ///< s11 = 0: the condition degenerates
};

struct TransmissionTarget {
  TargetStatus status = TargetStatus::Degenerate;
  double value = 0.0;   ///< real part of -Lambda / (2 s11) when defined
  double imag = 0.0;    ///< its imaginary part
};

/// For an anti-symmetric scale-invariant ring, perfect transmission (A = 0)
/// happens where cos(2k dxi) = -Lambda / (2 s11). Throws
/// std::invalid_argument on the wrong mode or a non scale-invariant node.
TransmissionTarget perfect_transmission_target(const RingConfig& cfg);

/// Wavenumbers in (k_min, k_max] solving cos(2 k dxi) = c.
std::vector<double> wavenumbers_for_cosine(double c, double delta_xi, double k_min, double k_max);

}  // namespace yjunction
