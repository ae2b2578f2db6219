#pragma once

// Points of Gr(n,k) over R or C, realized as rank-k orthogonal projectors,
// together with the minimizing geodesic between two points, the Riemannian
// distance and the Exp/Log maps for the Frobenius metric on tangent matrices.
//
// With s_P = I - 2P and U = s_Q s_P, the geodesic from P to Q is
//   gamma(t) = e^{t Omega} P e^{-t Omega},   Omega = 1/2 log U,
// defined whenever U has no eigenvalue -1. The tangent at P pointing at Q is
// (I - 2P) Omega and its norm is the distance ||Omega||_F.

#include <vector>

#include "grassgeo/matfun.hpp"

namespace grassgeo {

/// Distances below this are treated as coincident points.
inline constexpr double kPointTol = 1e-8;

class ProjectorPoint {
 public:
  Field field() const noexcept { return mat_.field(); }
  Index n() const noexcept { return mat_.rows(); }
  Index k() const noexcept { return k_; }
  const Matrix& matrix() const noexcept { return mat_; }
  /// n x k orthonormal basis of the range.
  const Matrix& basis() const noexcept { return basis_; }

 private:
  friend ProjectorPoint validate_projector(const Matrix& m, double tol);
  ProjectorPoint(Matrix mat, Matrix basis, Index k)
      : mat_(std::move(mat)), basis_(std::move(basis)), k_(k) {}

  Matrix mat_;
  Matrix basis_;
  Index k_ = 0;
};

/// Rounds the spectrum of the Hermitian part of m to {0,1} and rebuilds the
/// projector from the unit eigenvectors. Throws NotAProjector when m is not
/// Hermitian to within tol or some eigenvalue is farther than tol from {0,1}.
ProjectorPoint validate_projector(const Matrix& m, double tol);

/// ||P - Q||_F <= kPointTol.
bool same_point(const ProjectorPoint& p, const ProjectorPoint& q);

/// Hermitian matrix X at base P with P X P = 0 and (I-P) X (I-P) = 0.
class TangentVector {
 public:
  /// Throws NotTangent unless X is Hermitian (1e-10) and block off-diagonal
  /// with respect to P (1e-9).
  static TangentVector make(ProjectorPoint base, Matrix x);
  static TangentVector zero(const ProjectorPoint& base);

  const ProjectorPoint& base() const noexcept { return base_; }
  const Matrix& x() const noexcept { return x_; }
  double norm() const { return frobenius_norm(x_); }
  TangentVector scaled(double s) const { return TangentVector(base_, s * x_); }

 private:
  TangentVector(ProjectorPoint base, Matrix x)
      : base_(std::move(base)), x_(std::move(x)) {}

  ProjectorPoint base_;
  Matrix x_;
};

/// Skew-Hermitian generator of a geodesic leaving a base point.
class Velocity {
 public:
  /// Checks skewness (1e-10) and anticommutation with I - 2P (1e-8).
  static Velocity make(const ProjectorPoint& base, Matrix omega);

  const Matrix& omega() const noexcept { return omega_; }

 private:
  explicit Velocity(Matrix omega) : omega_(std::move(omega)) {}
  Matrix omega_;
};

/// I - 2P
Matrix reflection(const ProjectorPoint& p);

/// (I - 2Q)(I - 2P). Throws DimensionMismatch / RankMismatch.
Matrix relative_rotation(const ProjectorPoint& p, const ProjectorPoint& q);

/// 1/2 log[(I-2Q)(I-2P)]. Throws CutLocus (carrying the phase) when the
/// rotation has a phase within cut_tol of +-pi.
Velocity connecting_velocity(const ProjectorPoint& p, const ProjectorPoint& q,
                             double cut_tol = kDefaultCutTol);

/// Minimizing geodesic from P to Q with the spectrum of (I-2Q)(I-2P) cached,
/// for evaluating many parameters along one segment.
class Geodesic {
 public:
  Geodesic(ProjectorPoint p, ProjectorPoint q, double cut_tol = kDefaultCutTol);

  const ProjectorPoint& start() const noexcept { return p_; }
  const ProjectorPoint& end() const noexcept { return q_; }
  const Velocity& velocity() const noexcept { return velocity_; }
  double length() const { return frobenius_norm(velocity_.omega()); }

  /// U^{t/2} P U^{-t/2} from the cached spectrum.
  ProjectorPoint at(double t) const;
  /// e^{t Omega} P e^{-t Omega} through a fresh skew exponential.
  ProjectorPoint at_by_exponential(double t) const;

 private:
  ProjectorPoint p_;
  ProjectorPoint q_;
  UnitarySpectrum spectrum_;
  Velocity velocity_;
};

/// Point at parameter t on the geodesic from P to Q. t may range over
/// [-0.5, 1.5]; anything else throws BadParameter.
ProjectorPoint t_geometric_mean(const ProjectorPoint& p,
                                const ProjectorPoint& q, double t,
                                double cut_tol = kDefaultCutTol);

/// Midpoint P # Q.
inline ProjectorPoint midpoint(const ProjectorPoint& p,
                               const ProjectorPoint& q) {
  return t_geometric_mean(p, q, 0.5);
}

/// ||Omega||_F. Throws CutLocus.
double distance(const ProjectorPoint& p, const ProjectorPoint& q,
                double cut_tol = kDefaultCutTol);

TangentVector log_map(const ProjectorPoint& p, const ProjectorPoint& q,
                      double cut_tol = kDefaultCutTol);
ProjectorPoint exp_map(const TangentVector& x);

/// Angle at C between the geodesics to A and to B, in [0, pi]. Throws
/// DegenerateVertex when either side is shorter than kPointTol.
double vertex_angle(const ProjectorPoint& c, const ProjectorPoint& a,
                    const ProjectorPoint& b);

/// Canonical angles between the ranges, ascending in [0, pi/2]. Small angles
/// come from sines and large ones from cosines.
std::vector<double> principal_angles(const ProjectorPoint& p,
                                     const ProjectorPoint& q);

}  // namespace grassgeo
