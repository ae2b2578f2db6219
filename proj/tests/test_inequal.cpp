#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "grassgeo/inequal.hpp"
#include "grassgeo/sampling.hpp"
#include "support.hpp"

using namespace grassgeo;
using namespace grassgeo::inequal;
using grassgeo::testkit::diag_point;
using grassgeo::testkit::line;
using grassgeo::testkit::random_pair;
using grassgeo::testkit::standard_configs;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 1e-9;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Parse;
}

std::vector<ProjectorPoint> ball_triple(const testkit::Config& c, double radius,
                                        sampling::RngStream& rng) {
  const sampling::BallSpec ball(sampling::random_projector(c.n, c.k, c.field, rng),
                                radius, sampling::RadiusPolicy::Unbounded);
  return sampling::sample_ball(ball, 3, rng);
}

}  // namespace

// Collinear rank-one configurations are isometric to a segment, so every
// inequality is an equality on them.

TEST(SemiParallelogram, CollinearMidpointIsEquality) {
  for (double a : {0.05, 0.2, 0.4}) {
    const ProjectorPoint pa = line(0.0);
    const ProjectorPoint pb = line(2 * a);
    const ProjectorPoint pc = line(a);
    EXPECT_NEAR(semi_parallelogram_residual(pa, pb, pc), 0.0, 1e-12);
  }
}

TEST(SemiParallelogram, CollinearOffMidpointIsEquality) {
  // C anywhere on the line through A and B.
  EXPECT_NEAR(semi_parallelogram_residual(line(0.0), line(0.4), line(0.7)), 0.0, 1e-12);
}

TEST(SemiParallelogram, GapFormula) {
  EXPECT_DOUBLE_EQ(semi_parallelogram_gap(1.0, 1.0, 1.0, 2.0), 1.0 - (1.0 - 1.0));
  EXPECT_DOUBLE_EQ(semi_parallelogram_gap(0.0, 1.0, 1.0, 2.0), 0.0);
}

TEST(LawOfCosines, CollinearTriple) {
  // C strictly between A and B.
  const CosineReport r = law_of_cosines_report(line(0.0), line(0.6), line(0.25));
  EXPECT_NEAR(r.gamma, kPi, 1e-7);
  EXPECT_NEAR(r.alpha, 0.0, 1e-7);
  EXPECT_NEAR(r.beta, 0.0, 1e-7);
  EXPECT_NEAR(r.r_cosine, 0.0, 1e-12);
  EXPECT_NEAR(r.r_cosine2, 0.0, 1e-12);
  EXPECT_NEAR(r.r_anglesum, 0.0, 1e-7);
}

TEST(LawOfCosines, DegenerateTriple) {
  EXPECT_EQ(code_of([] { law_of_cosines_report(line(0.0), line(0.0), line(0.3)); }),
            ErrorCode::DegenerateVertex);
}

TEST(LawOfCosines, CutLocusPropagates) {
  EXPECT_EQ(code_of([] {
              law_of_cosines_report(diag_point({1, 0}), diag_point({0, 1}), line(0.3));
            }),
            ErrorCode::CutLocus);
}

TEST(Quadrilateral, CollinearMidpointCollapsesD) {
  const ProjectorPoint a = line(0.0);
  const ProjectorPoint b = line(0.5);
  const Quadrilateral q = quadrilateral(a, b, line(0.25));
  EXPECT_LE(q.d_mc, 1e-12);
  EXPECT_LE(frobenius_norm(q.d.matrix() - q.m.matrix()), 1e-12);
  EXPECT_NEAR(q.residual, 0.0, 1e-12);
}

TEST(Quadrilateral, CoincidentBaseIsFlatSegment) {
  // A = B = M, so M is the midpoint of the segment from C to D.
  const ProjectorPoint a = line(0.1);
  const Quadrilateral q = quadrilateral(a, a, line(0.5));
  EXPECT_NEAR(q.residual, 0.0, 1e-12);
}

TEST(Quadrilateral, ReflectedPointIsEquidistant) {
  sampling::RngStream rng(50, 0);
  for (const auto& c : standard_configs()) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto t = ball_triple(c, 0.3, rng);
      const Quadrilateral q = quadrilateral(t[0], t[1], t[2]);
      EXPECT_NEAR(q.d_mc, q.d_md, 1e-9);
    }
  }
}

TEST(MidpointContraction, Examples) {
  const ProjectorPoint a = line(0.0);
  const ProjectorPoint b = line(0.4);
  EXPECT_NEAR(midpoint_contraction_residual(a, b, b), 0.0, 1e-12);
  EXPECT_NEAR(midpoint_contraction_residual(a, a, b), 0.0, 1e-12);
}

TEST(TContraction, EndpointParameters) {
  sampling::RngStream rng(51, 0);
  const auto t = ball_triple({Field::Complex, 4, 2}, 0.3, rng);
  EXPECT_NEAR(t_contraction_residual(t[0], t[1], t[2], 0.0), 0.0, 1e-12);
  EXPECT_NEAR(t_contraction_residual(t[0], t[1], t[2], 1.0), 0.0, 1e-10);
  EXPECT_EQ(code_of([&] { t_contraction_residual(t[0], t[1], t[2], 1.2); }),
            ErrorCode::BadParameter);
}

TEST(TContraction, HalfIsMidpointContraction) {
  sampling::RngStream rng(52, 0);
  for (const auto& c : standard_configs()) {
    const auto t = ball_triple(c, 0.3, rng);
    EXPECT_NEAR(t_contraction_residual(t[0], t[1], t[2], 0.5),
                midpoint_contraction_residual(t[0], t[1], t[2]), 1e-12);
  }
}

TEST(TContraction, RationalParametersInSmallBalls) {
  sampling::RngStream rng(53, 0);
  for (const auto& c : standard_configs()) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto t = ball_triple(c, 0.2, rng);
      for (int p = 2; p <= 8; ++p) {
        EXPECT_GE(t_contraction_residual(t[0], t[1], t[2], (p - 1.0) / p), -kEps);
      }
    }
  }
}

TEST(ConvexityProbe, IdenticalPairsGiveZero) {
  const ProjectorPoint b1 = line(0.1);
  const ProjectorPoint b2 = line(0.7);
  for (double t : {0.0, 0.3, 0.5, 1.0}) {
    EXPECT_NEAR(convexity_probe(b1, b2, b1, b2, t), 0.0, 1e-12);
  }
}

TEST(ConvexityProbe, BothSignsOccur) {
  sampling::RngStream rng(54, 0);
  bool negative = false;
  bool positive = false;
  for (int trial = 0; trial < 100000 && !(negative && positive); ++trial) {
    const testkit::Config c = standard_configs()[static_cast<std::size_t>(trial % 6)];
    const sampling::BallSpec ball(sampling::random_projector(c.n, c.k, c.field, rng),
                                  1.2, sampling::RadiusPolicy::Unbounded);
    const auto q = sampling::sample_ball(ball, 4, rng);
    try {
      const double g = convexity_probe(q[0], q[1], q[2], q[3], 0.5);
      negative = negative || g < -1e-3;
      positive = positive || g > 1e-3;
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::CutLocus);
    }
  }
  EXPECT_TRUE(negative);
  EXPECT_TRUE(positive);
}

TEST(IdentitySuite, EqualPoints) {
  const ProjectorPoint p = line(0.3);
  EXPECT_LE(identity_suite(p, p, 0.3, 0.4).max(), 1e-15);
}

TEST(IdentitySuite, QuarterLines) {
  EXPECT_LE(identity_suite(line(0.0), line(kPi / 4), 0.5, 0.5).max(), 1e-12);
}

TEST(IdentitySuite, RandomPairsGr52) {
  sampling::RngStream rng(55, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto pq = random_pair(5, 2, Field::Complex, 0.7, rng);
    const double s = rng.uniform(0.05, 0.6);
    const double t = rng.uniform(0.05, 0.95 - s);
    EXPECT_LE(identity_suite(pq[0], pq[1], s, t).max(), 1e-9);
  }
}

TEST(IdentitySuite, ParameterDomain) {
  const ProjectorPoint p = line(0.0);
  const ProjectorPoint q = line(0.3);
  EXPECT_EQ(code_of([&] { identity_suite(p, q, 0.0, 0.5); }), ErrorCode::BadParameter);
  EXPECT_EQ(code_of([&] { identity_suite(p, q, 0.6, 0.5); }), ErrorCode::BadParameter);
}

// Reports

TEST(TriangleReport, SmallBallsHaveNoViolations) {
  sampling::RngStream rng(56, 0);
  for (const auto& c : standard_configs()) {
    for (int trial = 0; trial < 300; ++trial) {
      const auto t = ball_triple(c, 0.2, rng);
      const TriangleReport r = triangle_report(t[0], t[1], t[2]);
      ASSERT_TRUE(r.valid);
      EXPECT_GE(r.worst_residual(), -kEps);
      EXPECT_LE(r.d_ab, r.d_bc + r.d_ca + 1e-9);
      EXPECT_LE(r.d_bc, r.d_ab + r.d_ca + 1e-9);
      EXPECT_LE(r.d_ca, r.d_ab + r.d_bc + 1e-9);
      EXPECT_EQ(r.r_tcontract.size(), default_t_grid().size());
    }
  }
}

TEST(TriangleReport, AgreesWithStandaloneEvaluators) {
  sampling::RngStream rng(57, 0);
  for (const auto& c : standard_configs()) {
    const auto t = ball_triple(c, 0.5, rng);
    const TriangleReport r = triangle_report(t[0], t[1], t[2]);
    ASSERT_TRUE(r.valid);
    EXPECT_NEAR(r.r_semipara, semi_parallelogram_residual(t[0], t[1], t[2]), 1e-12);
    EXPECT_NEAR(r.r_quad, quadrilateral_residual(t[0], t[1], t[2]), 1e-12);
    EXPECT_NEAR(r.r_midpoint, midpoint_contraction_residual(t[0], t[1], t[2]), 1e-12);
    const CosineReport cr = law_of_cosines_report(t[0], t[1], t[2]);
    EXPECT_NEAR(*r.r_cosine, cr.r_cosine, 1e-12);
    EXPECT_NEAR(*r.r_cosine2, cr.r_cosine2, 1e-12);
    EXPECT_NEAR(*r.r_anglesum, cr.r_anglesum, 1e-12);
    for (const auto& [s, v] : r.r_tcontract) {
      EXPECT_NEAR(v, t_contraction_residual(t[0], t[1], t[2], s), 1e-12);
    }
  }
}

TEST(TriangleReport, CutLocusMarksInvalid) {
  const TriangleReport r =
      triangle_report(diag_point({1, 0}), diag_point({0, 1}), line(0.3));
  EXPECT_FALSE(r.valid);
  EXPECT_FALSE(r.failure.empty());
  EXPECT_TRUE(std::isinf(r.worst_residual()));
}

TEST(TriangleReport, CoincidentVerticesSkipAngles) {
  const TriangleReport r = triangle_report(line(0.2), line(0.2), line(0.5));
  EXPECT_TRUE(r.valid);
  EXPECT_FALSE(r.r_cosine.has_value());
  EXPECT_FALSE(r.alpha.has_value());
}
