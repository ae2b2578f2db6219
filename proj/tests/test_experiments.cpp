#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "grassgeo/experiments.hpp"
#include "support.hpp"

using namespace grassgeo;
using namespace grassgeo::experiments;
using grassgeo::testkit::line;
using grassgeo::testkit::max_abs_diff;

namespace {

constexpr double kPi = std::numbers::pi;

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Parse;
}

GoldenCase golden(const std::string& name) {
  return load_golden_case(default_golden_dir() / (name + ".json"));
}

const CheckResult* find_check(const GoldenResult& r, const std::string& label) {
  for (const CheckResult& c : r.checks) {
    if (c.label == label) return &c;
  }
  return nullptr;
}

std::filesystem::path scratch_dir(const std::string& tag) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("grassgeo_" + tag + "_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  std::filesystem::create_directories(dir);
  return dir;
}

std::string sweep_csv(const SweepConfig& cfg) {
  std::ostringstream out;
  write_sweep_csv(out, radius_sweep(cfg));
  return out.str();
}

}  // namespace

// Golden case files

TEST(GoldenFiles, AllLoad) {
  const std::vector<GoldenCase> cases = load_golden_dir(default_golden_dir());
  ASSERT_EQ(cases.size(), 3u);
  for (const GoldenCase& g : cases) {
    EXPECT_FALSE(g.expectations.empty()) << g.name;
    for (const Expectation& x : g.expectations) {
      EXPECT_TRUE(x.source == "published" || x.source == "derived") << g.name;
    }
  }
}

TEST(GoldenFiles, MalformedCaseIsParseError) {
  const auto dir = scratch_dir("malformed");
  const auto path = dir / "bad.json";
  std::ofstream(path) << R"({"name": "x", "field": "real"})";
  EXPECT_EQ(code_of([&] { load_golden_case(path); }), ErrorCode::Parse);
  std::ofstream(path) << "{ not json";
  EXPECT_EQ(code_of([&] { load_golden_case(path); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([&] { load_golden_dir(dir / "missing"); }), ErrorCode::Parse);
  std::filesystem::remove_all(dir);
}

TEST(GoldenExamples, NegativeConvexityGap) {
  const GoldenResult r = run_golden(golden("real_convexity_gap_negative"));
  for (const CheckResult& c : r.checks) EXPECT_TRUE(c.pass) << c.label << ": " << c.detail;
  EXPECT_NO_THROW(require_pass(r));
}

TEST(GoldenExamples, PositiveConvexityGap) {
  const GoldenResult r = run_golden(golden("real_convexity_gap_positive"));
  for (const CheckResult& c : r.checks) EXPECT_TRUE(c.pass) << c.label << ": " << c.detail;
}

TEST(GoldenExamples, PositiveGapMidMidValue) {
  // The stated matrices give 2.0286 for the mid-mid distance.
  const Quantities q = evaluate(golden("real_convexity_gap_positive"));
  EXPECT_NEAR(q.scalars.at("d(B1#B2,C1#C2)"), 2.0286, 2e-3);
  EXPECT_NEAR(q.scalars.at("d(B1#B2,C1#C2)"), q.scalars.at("midmid_oracle"), 1e-12);
}

TEST(GoldenExamples, NegativeGapLabelsAreSwapped) {
  const Quantities q = evaluate(golden("real_convexity_gap_negative"));
  EXPECT_NEAR(q.scalars.at("d(B1,C1)"), 0.4250, 2e-3);
  EXPECT_NEAR(q.scalars.at("d(B2,C2)"), 1.6321, 2e-3);
}

TEST(GoldenExamples, ComplexTripleIsOffTheCut) {
  const Quantities q = evaluate(golden("complex_outside_ball_triple"));
  EXPECT_GT(q.scalars.at("phase_margin"), 0.0);
  EXPECT_GT(q.scalars.at("d(B,C)-pi/4"), 0.0);
}

TEST(GoldenExamples, ComplexTripleTrueMidpointSatisfiesTheLaw) {
  const Quantities q = evaluate(golden("complex_outside_ball_triple"));
  EXPECT_NEAR(q.scalars.at("d(A,B)"), 0.99396, 1e-4);
  EXPECT_NEAR(q.scalars.at("d(A,C)"), 1.28010, 1e-4);
  EXPECT_NEAR(q.scalars.at("d(B,C)"), 1.69517, 1e-4);
  EXPECT_GT(q.scalars.at("semipara"), 0.0);
}

TEST(GoldenExamples, ComplexTriplePublishedFiguresUseHalfScaleAndBackwardPoint) {
  // The published numbers are reproduced by half the distance and by the
  // point at parameter -1/2 in place of the midpoint.
  const GoldenCase g = golden("complex_outside_ball_triple");
  const Quantities q = evaluate(g);
  EXPECT_NEAR(0.5 * q.scalars.at("d(A,B)"), 0.4970, 2e-3);
  EXPECT_NEAR(0.5 * q.scalars.at("d(A,C)"), 0.6401, 2e-3);
  EXPECT_NEAR(0.5 * q.scalars.at("d(B,C)"), 0.8476, 2e-3);
  EXPECT_NEAR(0.5 * q.scalars.at("d(M_back,C)"), 0.4567, 2e-3);
  EXPECT_NEAR(0.25 * q.scalars.at("semipara(M_back)"), -0.2937, 5e-3);
  for (const Expectation& x : g.expectations) {
    if (x.matrix) {
      EXPECT_LE(max_abs_diff(q.matrices.at("M_back"), *x.matrix), 2e-3);
      EXPECT_GT(max_abs_diff(q.matrices.at("M"), *x.matrix), 0.1);
    }
  }
}

TEST(GoldenExamples, ComplexTripleCheckOutcome) {
  const GoldenResult r = run_golden(golden("complex_outside_ball_triple"));
  ASSERT_NE(find_check(r, "[published] d(B,C)-pi/4 > 0"), nullptr);
  EXPECT_TRUE(find_check(r, "[published] d(B,C)-pi/4 > 0")->pass);
  EXPECT_TRUE(find_check(r, "[published] phase_margin > 0")->pass);
  EXPECT_FALSE(find_check(r, "[published] d(A,B)")->pass);
  EXPECT_EQ(code_of([&] { require_pass(r); }), ErrorCode::GoldenMismatch);
  EXPECT_LT(r.seconds, 1.0);
}

TEST(GoldenExamples, MissingQuantityFailsTheCheck) {
  GoldenCase g = golden("real_convexity_gap_negative");
  Expectation x;
  x.kind = ExpectationKind::ExactValue;
  x.quantities = {"no-such-quantity"};
  x.values = {1.0};
  x.tol = 1.0;
  x.source = "derived";
  g.expectations = {x};
  const GoldenResult r = run_golden(g);
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_FALSE(r.checks[0].pass);
}

// Line-angle oracle

TEST(LineOracle, AnglesAndDistances) {
  for (double phi : {-1.2, -0.3, 0.0, 0.4, 1.5}) {
    EXPECT_NEAR(line_angle(line(phi).matrix()), phi, 1e-14);
  }
  EXPECT_NEAR(line_distance(0.0, kPi / 4), std::numbers::sqrt2 * kPi / 4, 1e-15);
  // Lines at 80 and -80 degrees are 20 degrees apart.
  EXPECT_NEAR(line_distance(80 * kPi / 180, -80 * kPi / 180),
              std::numbers::sqrt2 * 20 * kPi / 180, 1e-14);
  EXPECT_NEAR(line_midpoint(80 * kPi / 180, -80 * kPi / 180), 90 * kPi / 180, 1e-14);
}

TEST(LineOracle, AgreesWithManifoldOperations) {
  sampling::RngStream rng(60, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = rng.uniform(-kPi / 2, kPi / 2);
    const double b = rng.uniform(-kPi / 2, kPi / 2);
    try {
      const double d = distance(line(a), line(b));
      EXPECT_NEAR(d, line_distance(a, b), 1e-9);
      const double m = line_midpoint(a, b);
      EXPECT_LE(frobenius_norm(midpoint(line(a), line(b)).matrix() - line(m).matrix()),
                1e-9);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::CutLocus);
    }
  }
}

// Sweeps

TEST(Sweep, SmallRadiusHasNoViolations) {
  SweepConfig cfg;
  cfg.radii = {0.1};
  cfg.samples_per_radius = 1000;
  const SweepRecord r = radius_sweep(cfg).front();
  EXPECT_EQ(r.samples, 1000u);
  EXPECT_EQ(r.cutlocus_count, 0u);
  EXPECT_EQ(r.semipara_violations + r.cosine_violations + r.cosine2_violations +
                r.anglesum_violations + r.quad_violations + r.midpoint_violations +
                r.tcontract_violations,
            0u);
  EXPECT_GE(r.worst_residual, -1e-9);
}

TEST(Sweep, CsvIsIndependentOfThreadCount) {
  SweepConfig cfg;
  cfg.radii = {0.2, 0.9, 1.6};
  cfg.samples_per_radius = 200;
  cfg.seed = 42;
  cfg.threads = 1;
  const std::string one = sweep_csv(cfg);
  cfg.threads = 4;
  EXPECT_EQ(sweep_csv(cfg), one);
  EXPECT_EQ(sweep_csv(cfg), one);
  cfg.seed = 43;
  EXPECT_NE(sweep_csv(cfg), one);
}

TEST(Sweep, CsvLayout) {
  SweepConfig cfg;
  cfg.field = Field::Real;
  cfg.n = 4;
  cfg.k = 2;
  cfg.radii = {0.1, 0.2};
  cfg.samples_per_radius = 10;
  std::istringstream in(sweep_csv(cfg));
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header,
            "field,n,k,radius,samples,cutlocus_count,semipara_vr,cosine_vr,cosine2_vr,"
            "anglesum_vr,quad_vr,midpoint_vr,tcontract_vr,worst_residual,seed");
  std::string row;
  std::getline(in, row);
  EXPECT_EQ(row.rfind("real,4,2,0.10000000000000001,10,0,0,0,0,0,0,0,0,", 0), 0u) << row;
  EXPECT_EQ(row.substr(row.size() - 3), ",42");
}

TEST(Sweep, RatesAreCountsOverSamples) {
  SweepConfig cfg;
  cfg.radii = {1.3};
  cfg.samples_per_radius = 300;
  const SweepRecord r = radius_sweep(cfg).front();
  for (std::size_t v : {r.semipara_violations, r.quad_violations, r.tcontract_violations}) {
    EXPECT_LE(v + r.cutlocus_count, r.samples);
    EXPECT_DOUBLE_EQ(r.rate(v) * 300.0, static_cast<double>(v));
  }
  if (r.worst_residual >= -1e-9) {
    EXPECT_EQ(r.semipara_violations + r.quad_violations, 0u);
  }
}

TEST(Sweep, RejectsUnorderedRadii) {
  SweepConfig cfg;
  cfg.radii = {0.3, 0.2};
  EXPECT_EQ(code_of([&] { radius_sweep(cfg); }), ErrorCode::BadParameter);
  cfg.radii = {0.0};
  EXPECT_EQ(code_of([&] { radius_sweep(cfg); }), ErrorCode::BadParameter);
}

// Witnesses

TEST(Witness, SmallRadiusFindsNothing) {
  EXPECT_EQ(code_of([] { find_violation(2, 1, Field::Complex, 0.1, 20000, 5); }),
            ErrorCode::NotFound);
}

TEST(Witness, LargeRadiusFindsAViolation) {
  const Witness w = find_violation(2, 1, Field::Complex, 1.4, 100000, 42);
  ASSERT_FALSE(w.violated.empty());
  EXPECT_LT(w.report.worst_residual(), -kWitnessTol);
}

TEST(Witness, JsonReplaysExactly) {
  const Witness w = find_violation(2, 1, Field::Complex, 1.4, 100000, 42);
  const Witness back = witness_from_json(witness_to_json(w));
  EXPECT_EQ(back.attempt, w.attempt);
  EXPECT_EQ(back.violated, w.violated);
  EXPECT_EQ(back.a.data(), w.a.data());
  EXPECT_NEAR(back.report.worst_residual(), w.report.worst_residual(), 1e-12);
  EXPECT_NEAR(back.report.r_quad, w.report.r_quad, 1e-12);
  EXPECT_NEAR(back.report.r_semipara, w.report.r_semipara, 1e-12);
}

TEST(Witness, RejectsBadInput) {
  EXPECT_EQ(code_of([] { find_violation(2, 1, Field::Complex, 1.0, 0, 1); }),
            ErrorCode::BadParameter);
  EXPECT_EQ(code_of([] { witness_from_json("{}"); }), ErrorCode::Parse);
}
