#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "grassgeo/grassmann.hpp"

namespace grassgeo::sampling {

/// Seed-reproducible random stream. Identical (seed, stream_index) pairs
/// produce identical draws on one build.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_index);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_index() const noexcept { return stream_; }

  double normal() { return normal_(engine_); }
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);
  /// n x m matrix of independent standard Gaussians; complex entries have
  /// independent standard Gaussian real and imaginary parts.
  Matrix gaussian(Field field, Index rows, Index cols);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Radius ceilings from the sectional-curvature upper bounds 2 (real) and
/// 4 (complex): pi / (2 sqrt(delta)).
double curvature_ceiling(Field field);

/// Conservative default sampling radius, pi/16 for both fields.
double default_radius(Field field);

enum class RadiusPolicy {
  /// radius must stay below curvature_ceiling(field)
  WithinCeiling,
  /// any radius in [0, pi/sqrt(2)), for sweeps that deliberately leave the
  /// convex regime
  Unbounded,
};

class BallSpec {
 public:
  /// Throws BadRadius if the radius violates the policy or is negative.
  BallSpec(ProjectorPoint center, double radius,
           RadiusPolicy policy = RadiusPolicy::WithinCeiling);

  const ProjectorPoint& center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }

 private:
  ProjectorPoint center_;
  double radius_;
};

/// U U* for an orthonormal basis U (Householder QR) of a Gaussian n x k
/// matrix. Throws BadRank unless 1 <= k <= n-1.
ProjectorPoint random_projector(Index n, Index k, Field field, RngStream& rng);

/// X = P G* (I-P) + (I-P) G P for Gaussian G, rescaled to the given norm.
TangentVector random_tangent(const ProjectorPoint& p, double norm,
                             RngStream& rng);

/// Exp of random tangents with norm uniform on [0, radius). Each point's
/// distance to the center is re-checked; a point at distance >= radius + 1e-9
/// throws BadRadius.
std::vector<ProjectorPoint> sample_ball(const BallSpec& spec, std::size_t count,
                                        RngStream& rng);

}  // namespace grassgeo::sampling
