#include "grassgeo/sampling.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>
#include <fmt/format.h>

namespace grassgeo::sampling {

namespace {

std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t stream) {
  return std::seed_seq{
      static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(stream),
      static_cast<std::uint32_t>(stream >> 32)};
}

constexpr double kUnboundedRadius = std::numbers::pi / std::numbers::sqrt2;

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_(stream_index) {
  auto seq = make_seed_seq(seed, stream_index);
  engine_.seed(seq);
}

double RngStream::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

Matrix RngStream::gaussian(Field field, Index rows, Index cols) {
  ComplexMatrix g(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) {
      const double re = normal();
      const double im = field == Field::Complex ? normal() : 0.0;
      g(i, j) = Complex(re, im);
    }
  }
  return Matrix(field, std::move(g));
}

double curvature_ceiling(Field field) {
  const double delta = field == Field::Real ? 2.0 : 4.0;
  return std::numbers::pi / (2.0 * std::sqrt(delta));
}

double default_radius(Field) { return std::numbers::pi / 16.0; }

BallSpec::BallSpec(ProjectorPoint center, double radius, RadiusPolicy policy)
    : center_(std::move(center)), radius_(radius) {
  const double ceiling = policy == RadiusPolicy::WithinCeiling
                             ? curvature_ceiling(center_.field())
                             : kUnboundedRadius;
  if (!(radius >= 0.0) || radius >= ceiling) {
    throw Error(ErrorCode::BadRadius,
                fmt::format("ball radius {} outside [0, {:.6f})", radius,
                            ceiling));
  }
}

ProjectorPoint random_projector(Index n, Index k, Field field, RngStream& rng) {
  if (k < 1 || k > n - 1) {
    throw Error(ErrorCode::BadRank,
                fmt::format("rank {} outside [1, {}] for n = {}", k, n - 1, n));
  }
  const Matrix g = rng.gaussian(field, n, k);
  Eigen::HouseholderQR<ComplexMatrix> qr(g.data());
  const ComplexMatrix basis =
      qr.householderQ() * ComplexMatrix::Identity(n, k);
  return validate_projector(Matrix(field, basis * basis.adjoint()), 1e-10);
}

TangentVector random_tangent(const ProjectorPoint& p, double norm,
                             RngStream& rng) {
  if (!(norm >= 0.0)) {
    throw Error(ErrorCode::BadParameter,
                fmt::format("tangent norm {} is negative", norm));
  }
  const Index n = p.n();
  const Matrix g = rng.gaussian(p.field(), n, n);
  const Matrix& pm = p.matrix();
  const Matrix comp = Matrix::identity(p.field(), n) - pm;
  const Matrix x = pm * g.adjoint() * comp + comp * g * pm;
  const double raw = frobenius_norm(x);
  if (norm == 0.0 || raw == 0.0) return TangentVector::zero(p);
  return TangentVector::make(p, (norm / raw) * x);
}

std::vector<ProjectorPoint> sample_ball(const BallSpec& spec, std::size_t count,
                                        RngStream& rng) {
  std::vector<ProjectorPoint> out;
  out.reserve(count);
  const ProjectorPoint& center = spec.center();
  for (std::size_t i = 0; i < count; ++i) {
    if (spec.radius() == 0.0) {
      out.push_back(center);
      continue;
    }
    const double r = rng.uniform(0.0, spec.radius());
    ProjectorPoint pt = exp_map(random_tangent(center, r, rng));
    const double d = distance(center, pt);
    if (d >= spec.radius() + 1e-9) {
      throw Error(ErrorCode::BadRadius,
                  fmt::format("sample at distance {:.12g} escapes ball of "
                              "radius {:.12g}",
                              d, spec.radius()));
    }
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace grassgeo::sampling
