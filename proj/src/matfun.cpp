#include "grassgeo/matfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>

namespace grassgeo {

namespace {

constexpr double kPi = std::numbers::pi;

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch,
                fmt::format("{}: shapes {}x{} and {}x{} differ", op, a.rows(),
                            a.cols(), b.rows(), b.cols()));
  }
}

// V diag(f(theta_j)) V*
template <typename F>
ComplexMatrix spectral_apply(const UnitarySpectrum& spectrum, F&& f) {
  const ComplexMatrix& v = spectrum.vectors.data();
  Eigen::VectorXcd diag(static_cast<Index>(spectrum.phases.size()));
  for (std::size_t j = 0; j < spectrum.phases.size(); ++j) {
    diag(static_cast<Index>(j)) = f(spectrum.phases[j]);
  }
  return v * diag.asDiagonal() * v.adjoint();
}

void require_off_cut(const UnitarySpectrum& spectrum, double cut_tol) {
  for (double theta : spectrum.phases) {
    if (std::abs(theta) >= kPi - cut_tol) {
      throw Error(ErrorCode::NegativeEigenvalue,
                  fmt::format("phase {:.12g} lies within {:g} of the branch "
                              "cut at +-pi",
                              theta, cut_tol),
                  theta);
    }
  }
}

// Spectral functions of real matrices are real; the imaginary part is round-off
// amplified by eigenvector conditioning near the cut.
ComplexMatrix real_projection(Field field, ComplexMatrix m) {
  if (field == Field::Real) m = m.real().cast<Complex>();
  return m;
}

}  // namespace

std::string_view to_string(Field field) noexcept {
  return field == Field::Real ? "real" : "complex";
}

Field parse_field(std::string_view text) {
  if (text == "real") return Field::Real;
  if (text == "complex") return Field::Complex;
  throw Error(ErrorCode::Parse,
              fmt::format("unknown field '{}' (expected real|complex)", text));
}

Field common_field(Field a, Field b) noexcept {
  return (a == Field::Real && b == Field::Real) ? Field::Real : Field::Complex;
}

Matrix::Matrix(Field field, ComplexMatrix data)
    : field_(field), data_(std::move(data)) {
  if (field_ == Field::Real) {
    const double residue =
        data_.size() == 0 ? 0.0 : data_.imag().cwiseAbs().maxCoeff();
    if (residue > kRealResidueTol) {
      throw Error(ErrorCode::BadParameter,
                  fmt::format("real-field matrix carries imaginary residue {:g}",
                              residue));
    }
    data_ = data_.real().cast<Complex>();
  }
}

Matrix Matrix::identity(Field field, Index n) {
  return Matrix(field, ComplexMatrix::Identity(n, n));
}

Matrix Matrix::zero(Field field, Index rows, Index cols) {
  return Matrix(field, ComplexMatrix::Zero(rows, cols));
}

Matrix Matrix::from_real(const Eigen::MatrixXd& data) {
  return Matrix(Field::Real, data.cast<Complex>());
}

Matrix Matrix::adjoint() const {
  Matrix out;
  out.field_ = field_;
  out.data_ = data_.adjoint();
  return out;
}

double Matrix::trace_real() const { return data_.trace().real(); }

Matrix Matrix::as_complex() const {
  Matrix out = *this;
  out.field_ = Field::Complex;
  return out;
}

// Arithmetic on exactly-real entries keeps the imaginary parts exactly zero,
// so these skip the realification check.
Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "operator+");
  Matrix out;
  out.field_ = common_field(a.field_, b.field_);
  out.data_ = a.data_ + b.data_;
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "operator-");
  Matrix out;
  out.field_ = common_field(a.field_, b.field_);
  out.data_ = a.data_ - b.data_;
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::ShapeMismatch,
                fmt::format("operator*: {}x{} times {}x{}", a.rows(), a.cols(),
                            b.rows(), b.cols()));
  }
  Matrix out;
  out.field_ = common_field(a.field_, b.field_);
  out.data_ = a.data_ * b.data_;
  return out;
}

Matrix operator*(double s, const Matrix& a) {
  Matrix out;
  out.field_ = a.field_;
  out.data_ = s * a.data_;
  return out;
}

double frobenius_norm(const Matrix& a) { return a.data().norm(); }

double frobenius_inner(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "frobenius_inner");
  return (a.data().conjugate().cwiseProduct(b.data())).sum().real();
}

double hermitian_defect(const Matrix& a) {
  return (a.data() - a.data().adjoint()).norm();
}

double skew_defect(const Matrix& a) {
  return (a.data() + a.data().adjoint()).norm();
}

double unitary_defect(const Matrix& a) {
  const Index n = a.cols();
  return (a.data().adjoint() * a.data() - ComplexMatrix::Identity(n, n)).norm();
}

HermitianEigen hermitian_eigen(const Matrix& m, double tol) {
  if (!m.is_square()) {
    throw Error(ErrorCode::ShapeMismatch, "hermitian_eigen: matrix not square");
  }
  const double defect = hermitian_defect(m);
  if (defect > tol * frobenius_norm(m)) {
    throw Error(ErrorCode::NotHermitian,
                fmt::format("hermitian_eigen: ||M - M*||_F = {:g}", defect));
  }
  const ComplexMatrix sym = 0.5 * (m.data() + m.data().adjoint());
  HermitianEigen out;
  // Eigen returns eigenvalues in ascending order.
  if (m.field() == Field::Real) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym.real());
    const Eigen::VectorXd& w = solver.eigenvalues();
    out.eigenvalues.assign(w.data(), w.data() + w.size());
    out.eigenvectors = Matrix::from_real(solver.eigenvectors());
  } else {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    const Eigen::VectorXd& w = solver.eigenvalues();
    out.eigenvalues.assign(w.data(), w.data() + w.size());
    out.eigenvectors = Matrix(Field::Complex, solver.eigenvectors());
  }
  return out;
}

UnitarySpectrum unitary_eigen(const Matrix& u, double tol) {
  if (!u.is_square()) {
    throw Error(ErrorCode::ShapeMismatch, "unitary_eigen: matrix not square");
  }
  const double defect = unitary_defect(u);
  if (defect > tol) {
    throw Error(ErrorCode::NotUnitary,
                fmt::format("unitary_eigen: ||U*U - I||_F = {:g}", defect));
  }
  Eigen::ComplexSchur<ComplexMatrix> schur(u.data());
  const ComplexMatrix& t = schur.matrixT();
  UnitarySpectrum out;
  out.phases.reserve(static_cast<std::size_t>(t.rows()));
  for (Index j = 0; j < t.rows(); ++j) {
    double theta = std::arg(t(j, j));
    if (theta <= -kPi) theta = kPi;
    out.phases.push_back(theta);
  }
  out.vectors = Matrix(Field::Complex, schur.matrixU());
  return out;
}

double max_abs_phase(const UnitarySpectrum& spectrum) noexcept {
  double m = 0.0;
  for (double theta : spectrum.phases) m = std::max(m, std::abs(theta));
  return m;
}

Matrix principal_log_unitary(const UnitarySpectrum& spectrum, Field field,
                             double cut_tol) {
  require_off_cut(spectrum, cut_tol);
  ComplexMatrix s =
      spectral_apply(spectrum, [](double theta) { return Complex(0.0, theta); });
  s = 0.5 * (s - s.adjoint()).eval();
  return Matrix(field, real_projection(field, std::move(s)));
}

Matrix principal_log_unitary(const Matrix& u, double cut_tol) {
  return principal_log_unitary(unitary_eigen(u), u.field(), cut_tol);
}

Matrix unitary_fractional_power(const UnitarySpectrum& spectrum, Field field,
                                double t, double cut_tol) {
  require_off_cut(spectrum, cut_tol);
  return Matrix(field, real_projection(field, spectral_apply(spectrum, [t](double theta) {
                  return std::polar(1.0, t * theta);
                })));
}

Matrix unitary_fractional_power(const Matrix& u, double t, double cut_tol) {
  return unitary_fractional_power(unitary_eigen(u), u.field(), t, cut_tol);
}

Matrix expm_skew(const Matrix& s) {
  if (!s.is_square()) {
    throw Error(ErrorCode::ShapeMismatch, "expm_skew: matrix not square");
  }
  const double defect = skew_defect(s);
  if (defect > 1e-10 * (1.0 + frobenius_norm(s))) {
    throw Error(ErrorCode::NotSkew,
                fmt::format("expm_skew: ||S + S*||_F = {:g}", defect));
  }
  // S = iH with H = -iS Hermitian, so exp(S) = W diag(e^{i lambda}) W*.
  const ComplexMatrix skew = 0.5 * (s.data() - s.data().adjoint());
  const ComplexMatrix h = Complex(0.0, -1.0) * skew;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  Eigen::VectorXcd phase(lambda.size());
  for (Index j = 0; j < lambda.size(); ++j) phase(j) = std::polar(1.0, lambda(j));
  const ComplexMatrix& w = solver.eigenvectors();
  return Matrix(s.field(), w * phase.asDiagonal() * w.adjoint());
}

}  // namespace grassgeo
