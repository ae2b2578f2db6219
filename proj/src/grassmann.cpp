#include "grassgeo/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/SVD>
#include <fmt/format.h>

namespace grassgeo {

namespace {

// Tolerance used to re-project matrices produced along a geodesic.
constexpr double kInternalTol = 1e-8;

void require_compatible(const ProjectorPoint& p, const ProjectorPoint& q) {
  if (p.n() != q.n()) {
    throw Error(ErrorCode::DimensionMismatch,
                fmt::format("ambient dimensions {} and {} differ", p.n(), q.n()));
  }
  if (p.k() != q.k()) {
    throw Error(ErrorCode::RankMismatch,
                fmt::format("ranks {} and {} differ", p.k(), q.k()));
  }
}

UnitarySpectrum rotation_spectrum(const Matrix& u) {
  return unitary_eigen(u, 1e-8);
}

Matrix hermitian_part(const Matrix& m) {
  return Matrix(m.field(), 0.5 * (m.data() + m.data().adjoint()));
}

Matrix skew_part(const Matrix& m) {
  return Matrix(m.field(), 0.5 * (m.data() - m.data().adjoint()));
}

// W P W* for unitary W.
ProjectorPoint conjugate(const Matrix& w, const ProjectorPoint& p, Index rank) {
  ProjectorPoint out = validate_projector(w * p.matrix() * w.adjoint(),
                                          kInternalTol);
  if (out.k() != rank) {
    throw Error(ErrorCode::RankMismatch,
                fmt::format("conjugated point has rank {}, expected {}",
                            out.k(), rank));
  }
  return out;
}

}  // namespace

ProjectorPoint validate_projector(const Matrix& m, double tol) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NotAProjector,
                fmt::format("{}x{} matrix is not square", m.rows(), m.cols()));
  }
  const double defect = hermitian_defect(m);
  if (defect > tol) {
    throw Error(ErrorCode::NotAProjector,
                fmt::format("||M - M*||_F = {:g} exceeds {:g}", defect, tol));
  }
  // The defect check above is absolute; the eigensolver only needs the
  // Hermitian part, so hand it that.
  const HermitianEigen eig = hermitian_eigen(hermitian_part(m), 1.0);
  const Index n = m.rows();
  std::vector<Index> unit;
  for (Index j = 0; j < n; ++j) {
    const double lambda = eig.eigenvalues[static_cast<std::size_t>(j)];
    if (std::abs(lambda - 1.0) <= tol) {
      unit.push_back(j);
    } else if (std::abs(lambda) > tol) {
      throw Error(ErrorCode::NotAProjector,
                  fmt::format("eigenvalue {:.12g} is farther than {:g} from "
                              "{{0, 1}}",
                              lambda, tol));
    }
  }
  const Index k = static_cast<Index>(unit.size());
  ComplexMatrix basis(n, k);
  for (Index c = 0; c < k; ++c) {
    basis.col(c) = eig.eigenvectors.data().col(unit[static_cast<std::size_t>(c)]);
  }
  ComplexMatrix proj = basis * basis.adjoint();
  proj = 0.5 * (proj + proj.adjoint()).eval();
  return ProjectorPoint(Matrix(m.field(), std::move(proj)),
                        Matrix(m.field(), std::move(basis)), k);
}

bool same_point(const ProjectorPoint& p, const ProjectorPoint& q) {
  return p.n() == q.n() &&
         frobenius_norm(p.matrix() - q.matrix()) <= kPointTol;
}

TangentVector TangentVector::make(ProjectorPoint base, Matrix x) {
  if (x.rows() != base.n() || x.cols() != base.n()) {
    throw Error(ErrorCode::NotTangent,
                fmt::format("tangent of shape {}x{} at a point of Gr({},{})",
                            x.rows(), x.cols(), base.n(), base.k()));
  }
  const double herm = hermitian_defect(x);
  if (herm > 1e-10) {
    throw Error(ErrorCode::NotTangent,
                fmt::format("tangent not Hermitian: ||X - X*||_F = {:g}", herm));
  }
  const Matrix& p = base.matrix();
  const Matrix comp = Matrix::identity(p.field(), p.rows()) - p;
  const double inner = frobenius_norm(p * x * p);
  const double outer = frobenius_norm(comp * x * comp);
  if (inner > 1e-9 || outer > 1e-9) {
    throw Error(ErrorCode::NotTangent,
                fmt::format("tangent has diagonal blocks: ||PXP||_F = {:g}, "
                            "||(I-P)X(I-P)||_F = {:g}",
                            inner, outer));
  }
  return TangentVector(std::move(base), hermitian_part(x));
}

TangentVector TangentVector::zero(const ProjectorPoint& base) {
  return TangentVector(base, Matrix::zero(base.field(), base.n(), base.n()));
}

Velocity Velocity::make(const ProjectorPoint& base, Matrix omega) {
  const double skew = skew_defect(omega);
  if (skew > 1e-10) {
    throw Error(ErrorCode::NotSkew,
                fmt::format("velocity not skew: ||W + W*||_F = {:g}", skew));
  }
  const Matrix s = reflection(base);
  const double anti = frobenius_norm(s * omega + omega * s);
  if (anti > 1e-8) {
    throw Error(ErrorCode::BadParameter,
                fmt::format("velocity does not anticommute with I - 2P: {:g}",
                            anti));
  }
  return Velocity(std::move(omega));
}

Matrix reflection(const ProjectorPoint& p) {
  return Matrix::identity(p.field(), p.n()) - 2.0 * p.matrix();
}

Matrix relative_rotation(const ProjectorPoint& p, const ProjectorPoint& q) {
  require_compatible(p, q);
  return reflection(q) * reflection(p);
}

Velocity connecting_velocity(const ProjectorPoint& p, const ProjectorPoint& q,
                             double cut_tol) {
  const Matrix u = relative_rotation(p, q);
  try {
    return Velocity::make(p, 0.5 * principal_log_unitary(rotation_spectrum(u),
                                                          u.field(), cut_tol));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NegativeEigenvalue) throw;
    throw Error(ErrorCode::CutLocus, e.what(), e.phase());
  }
}

Geodesic::Geodesic(ProjectorPoint p, ProjectorPoint q, double cut_tol)
    : p_(std::move(p)),
      q_(std::move(q)),
      spectrum_(rotation_spectrum(relative_rotation(p_, q_))),
      velocity_([&] {
        try {
          const Field f = common_field(p_.field(), q_.field());
          return Velocity::make(
              p_, 0.5 * principal_log_unitary(spectrum_, f, cut_tol));
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NegativeEigenvalue) throw;
          throw Error(ErrorCode::CutLocus, e.what(), e.phase());
        }
      }()) {}

ProjectorPoint Geodesic::at(double t) const {
  const Field f = common_field(p_.field(), q_.field());
  // Off-cut was established by the constructor.
  const Matrix w = unitary_fractional_power(spectrum_, f, 0.5 * t, 0.0);
  return conjugate(w, p_, p_.k());
}

ProjectorPoint Geodesic::at_by_exponential(double t) const {
  const Matrix w = expm_skew(t * velocity_.omega());
  return conjugate(w, p_, p_.k());
}

ProjectorPoint t_geometric_mean(const ProjectorPoint& p,
                                const ProjectorPoint& q, double t,
                                double cut_tol) {
  if (!(t >= -0.5 && t <= 1.5)) {
    throw Error(ErrorCode::BadParameter,
                fmt::format("geodesic parameter {} outside [-0.5, 1.5]", t));
  }
  return Geodesic(p, q, cut_tol).at(t);
}

double distance(const ProjectorPoint& p, const ProjectorPoint& q,
                double cut_tol) {
  return frobenius_norm(connecting_velocity(p, q, cut_tol).omega());
}

TangentVector log_map(const ProjectorPoint& p, const ProjectorPoint& q,
                      double cut_tol) {
  const Velocity v = connecting_velocity(p, q, cut_tol);
  return TangentVector::make(p, hermitian_part(reflection(p) * v.omega()));
}

ProjectorPoint exp_map(const TangentVector& x) {
  const ProjectorPoint& p = x.base();
  // (I - 2P) X is skew by tangency.
  const Matrix omega = skew_part(reflection(p) * x.x());
  return conjugate(expm_skew(omega), p, p.k());
}

double vertex_angle(const ProjectorPoint& c, const ProjectorPoint& a,
                    const ProjectorPoint& b) {
  const TangentVector to_a = log_map(c, a);
  const TangentVector to_b = log_map(c, b);
  const double la = to_a.norm();
  const double lb = to_b.norm();
  if (la <= kPointTol || lb <= kPointTol) {
    throw Error(ErrorCode::DegenerateVertex,
                fmt::format("vertex angle undefined: side lengths {:g}, {:g}",
                            la, lb));
  }
  const Matrix u = to_a.x() * (1.0 / la);
  const Matrix v = to_b.x() * (1.0 / lb);
  return 2.0 * std::atan2(frobenius_norm(u - v), frobenius_norm(u + v));
}

std::vector<double> principal_angles(const ProjectorPoint& p,
                                     const ProjectorPoint& q) {
  require_compatible(p, q);
  const Index k = p.k();
  if (k == 0) return {};
  const ComplexMatrix& bp = p.basis().data();
  const ComplexMatrix& bq = q.basis().data();
  const ComplexMatrix cross = bp.adjoint() * bq;
  const ComplexMatrix residual = bq - bp * cross;
  // Both come back descending.
  const Eigen::VectorXd cosines =
      Eigen::JacobiSVD<ComplexMatrix>(cross).singularValues();
  const Eigen::VectorXd sines =
      Eigen::JacobiSVD<ComplexMatrix>(residual).singularValues();
  std::vector<double> angles(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) {
    const double c = std::min(1.0, cosines(i));
    const double s = std::min(1.0, sines(k - 1 - i));
    angles[static_cast<std::size_t>(i)] =
        c * c >= 0.5 ? std::asin(s) : std::acos(c);
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

}  // namespace grassgeo
