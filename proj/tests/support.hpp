#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <vector>

#include <Eigen/QR>

#include "grassgeo/grassmann.hpp"
#include "grassgeo/sampling.hpp"

namespace grassgeo::testkit {

inline Matrix real_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  const auto n = static_cast<Index>(rows.size());
  const auto m = static_cast<Index>(rows.begin()->size());
  Eigen::MatrixXd d(n, m);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (double v : row) d(i, j++) = v;
    ++i;
  }
  return Matrix::from_real(d);
}

inline Matrix complex_matrix(
    std::initializer_list<std::initializer_list<std::complex<double>>> rows) {
  const auto n = static_cast<Index>(rows.size());
  const auto m = static_cast<Index>(rows.begin()->size());
  ComplexMatrix d(n, m);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (const auto& v : row) d(i, j++) = v;
    ++i;
  }
  return Matrix(Field::Complex, d);
}

/// Projector onto the line of R^2 at angle phi.
inline ProjectorPoint line(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  return validate_projector(real_matrix({{c * c, c * s}, {c * s, s * s}}), 1e-12);
}

inline ProjectorPoint diag_point(std::initializer_list<double> d) {
  Eigen::VectorXd v(static_cast<Index>(d.size()));
  Index i = 0;
  for (double x : d) v(i++) = x;
  return validate_projector(Matrix::from_real(v.asDiagonal().toDenseMatrix()), 1e-12);
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a.data() - b.data()).cwiseAbs().maxCoeff();
}

inline Matrix random_unitary(Field field, Index n, sampling::RngStream& rng) {
  const ComplexMatrix g = rng.gaussian(field, n, n).data();
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  return Matrix(field, qr.householderQ() * ComplexMatrix::Identity(n, n));
}

/// V diag(e^{i theta}) V* with phases uniform on (-bound, bound).
inline Matrix random_unitary_with_phases(Index n, double bound,
                                         sampling::RngStream& rng,
                                         std::vector<double>* phases = nullptr) {
  const Matrix v = random_unitary(Field::Complex, n, rng);
  Eigen::VectorXcd d(n);
  if (phases) phases->clear();
  for (Index i = 0; i < n; ++i) {
    const double th = rng.uniform(-bound, bound);
    if (phases) phases->push_back(th);
    d(i) = std::polar(1.0, th);
  }
  return Matrix(Field::Complex, v.data() * d.asDiagonal() * v.data().adjoint());
}

/// Two points of a ball of the given radius around a random center; the
/// pair is at most 2 radius apart.
inline std::vector<ProjectorPoint> random_pair(Index n, Index k, Field field,
                                               double radius,
                                               sampling::RngStream& rng) {
  const sampling::BallSpec ball(sampling::random_projector(n, k, field, rng),
                                radius, sampling::RadiusPolicy::Unbounded);
  return sampling::sample_ball(ball, 2, rng);
}

struct Config {
  Field field;
  Index n;
  Index k;
};

inline std::vector<Config> standard_configs() {
  std::vector<Config> out;
  for (Field f : {Field::Real, Field::Complex}) {
    for (auto [n, k] : {std::pair<Index, Index>{2, 1}, {4, 2}, {5, 2}}) {
      out.push_back({f, n, k});
    }
  }
  return out;
}

}  // namespace grassgeo::testkit
