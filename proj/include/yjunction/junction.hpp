#pragma once

// A single Y-junction: three half-lines meeting at one node whose boundary
// condition (U - I)Psi + i L0 (U + I)Psi' = 0 is fixed by U in U(3).
//
// U = V diag(e^{i theta_1}, e^{i theta_2}, e^{i theta_3}) V^dagger with
// V = e^{i alpha l3} e^{i beta l2} e^{i gamma l3} e^{i delta l5} e^{i a l3} e^{i b l2}.
// The overall phase of W and its trailing e^{i c l3} e^{i d l8} factors drop
// out of U, so only these nine angles and L0 are stored.

#include <array>

#include "yjunction/smallmat.hpp"

namespace yjunction {

/// Default tolerance for the angle and symmetry predicates.
inline constexpr double kPredicateTol = 1e-9;

struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double a = 0.0;
  double b = 0.0;
};

/// Reduces an angle to [0, 2*pi).
double canonical_angle(double angle);

/// Distance between two angles on the circle, in [0, pi].
double angle_distance(double x, double y);

/// Junction parameters. Angles are canonicalized to [0, 2*pi); the
/// eigenphase order is kept as supplied.
class JunctionParams {
public:
  /// Throws std::invalid_argument for non-finite angles or L0 <= 0.
  JunctionParams(std::array<double, 3> theta, EulerAngles euler, double L0 = 1.0);

  const std::array<double, 3>& theta() const { return theta_; }
  const EulerAngles& euler() const { return euler_; }
  double L0() const { return L0_; }

private:
  std::array<double, 3> theta_;
  EulerAngles euler_;
  double L0_;
};

enum class Orientation { Inward, Outward };

struct ScatteringMatrix {
  Mat3 m;
  double k = 0.0;
  double xi = 0.0;
  Orientation orientation = Orientation::Inward;
};

using RealMat3 = std::array<std::array<double, 3>, 3>;

Mat3 build_V(const JunctionParams& p);
Mat3 build_U(const JunctionParams& p);

/// S-matrix of the node at position xi for wavenumber k.
///
///   Inward:  S = e^{+2ik xi} V S0 V^dagger,  S0_ii = (ik L_i + 1)/(ik L_i - 1)
///   Outward: S = e^{-2ik xi} V S0 V^dagger,  S0_ii = (ik L_i - 1)/(ik L_i + 1)
///
/// with L_i = L0 cot(theta_i / 2). The diagonal is evaluated as
/// (ik L0 cos(t) +- sin(t)) / (ik L0 cos(t) -+ sin(t)), t = theta_i / 2, so
/// theta_i = 0 needs no special case. Throws std::invalid_argument if k <= 0.
ScatteringMatrix s_matrix(const JunctionParams& p, double k, double xi, Orientation orientation);

/// max-norm of (U - I)Psi + i L0 (U + I)Psi' where Psi, Psi' are the boundary
/// values built from incoming amplitudes phi and outgoing amplitudes psi.
/// Zero exactly when psi is the scattered wave of phi.
double junction_residual(const Mat3& U, double L0, double k, double xi, const Vec3& phi,
                         const Vec3& psi, Orientation orientation);

/// Entry (j, i) is |S_ji|^2 = P(i -> j).
RealMat3 probabilities(const ScatteringMatrix& S);

/// U == U^T within tol (max-norm). Sufficient: alpha, gamma, a each in {0, pi}.
bool is_time_reversal(const JunctionParams& p, double tol = kPredicateTol);

/// Every theta_i within tol of 0 or pi (mod 2 pi), i.e. U has eigenvalues +-1.
bool is_scale_invariant(const JunctionParams& p, double tol = kPredicateTol);

/// The symmetric three-port beam splitter parametrized by b.
Mat3 buttiker_matrix(double b);

/// Parameters whose phase-stripped S-matrix equals buttiker_matrix(b):
/// alpha = 0, beta = 3pi/2, gamma = pi, delta = pi/4, a = 0, theta = (0, pi, pi).
JunctionParams buttiker_params(double b, double L0 = 1.0);

/// Same boundary condition expressed with a different length scale:
/// new_L0 cot(theta'/2) = L0 cot(theta/2). theta in {0, pi} are fixed points.
/// Throws std::invalid_argument if new_L0 <= 0.
JunctionParams gauge_shift(const JunctionParams& p, double new_L0);

}  // namespace yjunction
