#pragma once

// Dense matrix-function kernel shared by the manifold layer.
//
// Every matrix is stored in complex arithmetic and tagged with the field it
// belongs to. A Real-tagged matrix has an identically zero imaginary part;
// spectral routines check that invariant on their output before discarding
// the rounding residue.

#include <complex>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "grassgeo/error.hpp"

namespace grassgeo {

enum class Field { Real, Complex };

std::string_view to_string(Field field) noexcept;
Field parse_field(std::string_view text);
/// Real only if both are Real.
Field common_field(Field a, Field b) noexcept;

using Index = Eigen::Index;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Largest imaginary part a real-field result may carry before realification.
inline constexpr double kRealResidueTol = 1e-10;
/// Phases within this distance of +-pi are treated as the branch cut.
inline constexpr double kDefaultCutTol = 1e-6;

class Matrix {
 public:
  Matrix() = default;
  /// For Field::Real, entries with |imag| <= kRealResidueTol are realified;
  /// anything larger throws BadParameter.
  Matrix(Field field, ComplexMatrix data);

  static Matrix identity(Field field, Index n);
  static Matrix zero(Field field, Index rows, Index cols);
  static Matrix from_real(const Eigen::MatrixXd& data);

  Field field() const noexcept { return field_; }
  Index rows() const noexcept { return data_.rows(); }
  Index cols() const noexcept { return data_.cols(); }
  bool is_square() const noexcept { return rows() == cols(); }
  const ComplexMatrix& data() const noexcept { return data_; }
  Complex operator()(Index i, Index j) const { return data_(i, j); }

  Matrix adjoint() const;
  double trace_real() const;
  /// Same entries, promoted to the complex field.
  Matrix as_complex() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(double s, const Matrix& a);
  friend Matrix operator*(const Matrix& a, double s) { return s * a; }
  friend Matrix operator-(const Matrix& a) { return -1.0 * a; }

 private:
  Field field_ = Field::Real;
  ComplexMatrix data_;
};

/// ||A||_F, computed directly from entries.
double frobenius_norm(const Matrix& a);
/// Re tr(A* B). Throws ShapeMismatch.
double frobenius_inner(const Matrix& a, const Matrix& b);
/// ||A - A*||_F
double hermitian_defect(const Matrix& a);
/// ||A + A*||_F
double skew_defect(const Matrix& a);
/// ||A* A - I||_F
double unitary_defect(const Matrix& a);

struct HermitianEigen {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // columns, unitary
};

/// Requires ||M - M*||_F <= tol * ||M||_F (NotHermitian otherwise). The
/// Hermitian part of M is diagonalized; real input yields real vectors.
HermitianEigen hermitian_eigen(const Matrix& m, double tol = 1e-10);

struct UnitarySpectrum {
  std::vector<double> phases;  // each in (-pi, pi]
  Matrix vectors;              // complex, unitary
};

/// Diagonalizes a unitary matrix through its complex Schur form, which is
/// diagonal up to rounding for normal input. Throws NotUnitary.
UnitarySpectrum unitary_eigen(const Matrix& u, double tol = 1e-10);

/// Largest |phase| of the spectrum.
double max_abs_phase(const UnitarySpectrum& spectrum) noexcept;

/// Principal logarithm V diag(i theta) V*. Throws NegativeEigenvalue (carrying
/// the phase) when some |theta| >= pi - cut_tol.
Matrix principal_log_unitary(const Matrix& u, double cut_tol = kDefaultCutTol);
Matrix principal_log_unitary(const UnitarySpectrum& spectrum, Field field,
                             double cut_tol = kDefaultCutTol);

/// exp(t log U) on the principal branch.
Matrix unitary_fractional_power(const Matrix& u, double t,
                                double cut_tol = kDefaultCutTol);
Matrix unitary_fractional_power(const UnitarySpectrum& spectrum, Field field,
                                double t, double cut_tol = kDefaultCutTol);

/// Exponential of a skew-Hermitian matrix via the Hermitian eigenproblem of
/// -iS. Throws NotSkew when ||S + S*||_F > 1e-10 (1 + ||S||_F).
Matrix expm_skew(const Matrix& s);

}  // namespace grassgeo
