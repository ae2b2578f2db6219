#pragma once

// Reproduction of published numerical examples and Monte-Carlo sweeps over
// the ball radius that locate where each comparison inequality starts to
// fail.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "grassgeo/inequal.hpp"

namespace grassgeo::experiments {

// ---------------------------------------------------------------------------
// Golden cases

enum class ExpectationKind { ExactValue, Multiset, InequalityDirection };

struct Expectation {
  ExpectationKind kind = ExpectationKind::ExactValue;
  std::vector<std::string> quantities;  // one entry except for Multiset
  std::vector<double> values;           // expected scalars (ExactValue, Multiset)
  std::optional<Matrix> matrix;         // expected matrix for matrix quantities
  double tol = 0.0;
  bool expect_positive = true;          // InequalityDirection
  std::string source;                   // "published" or "derived"
};

/// Printed alongside the checks but never asserted.
struct ReportItem {
  std::string quantity;
  double scale = 1.0;
  std::string note;
};

enum class Construction { Triangle, Quadruple };

struct GoldenCase {
  std::string name;
  std::string description;
  Field field = Field::Real;
  double validate_tol = 1e-3;
  Construction construction = Construction::Triangle;
  std::map<std::string, Matrix> inputs;  // verbatim 4-decimal matrices
  std::vector<Expectation> expectations;
  std::vector<ReportItem> report;
};

GoldenCase load_golden_case(const std::filesystem::path& path);
/// Every *.json in dir, sorted by file name.
std::vector<GoldenCase> load_golden_dir(const std::filesystem::path& dir);
/// Directory the build was configured with.
std::filesystem::path default_golden_dir();

/// All scalar and matrix quantities a construction can produce.
///
/// Triangle (A, B, C): d(A,B), d(A,C), d(B,C), d(M,C), semipara, M,
///   d(B,C)-pi/4, phase_margin, and the backward point M_back = A #_{-1/2} B
///   with d(M_back,C) and semipara(M_back).
/// Quadruple (B1, B2, C1, C2): d(B1,C1), d(B2,C2), d(B1,B2), d(C1,C2),
///   d(B1#B2,C1#C2), gap, midmid-oracle, phase_margin.
///
/// phase_margin is pi - cut_tol - max |phase| over the listed reflection
/// products; positive means none of them has eigenvalue -1.
struct Quantities {
  std::map<std::string, double> scalars;
  std::map<std::string, Matrix> matrices;
};

Quantities evaluate(const GoldenCase& golden);

/// Independent check for rank-one points of R^2: the projector onto the line
/// at angle phi has 2 phi = atan2(2 P01, P00 - P11), midpoints bisect the
/// smaller angle, and the distance is sqrt(2) times the line angle.
double line_angle(const Matrix& p);
double line_distance(double phi, double psi);
double line_midpoint(double phi, double psi);

struct CheckResult {
  std::string label;
  std::string detail;  // computed vs expected, human readable
  bool pass = false;
};

struct GoldenResult {
  std::string name;
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, double>> report;
  double seconds = 0.0;

  bool pass() const;
};

GoldenResult run_golden(const GoldenCase& golden);
std::vector<GoldenResult> reproduce_examples(const std::filesystem::path& dir);
/// Throws GoldenMismatch naming the first failing check.
void require_pass(const GoldenResult& result);

// ---------------------------------------------------------------------------
// Radius sweeps

struct SweepConfig {
  Index n = 2;
  Index k = 1;
  Field field = Field::Complex;
  std::vector<double> radii;
  std::size_t samples_per_radius = 1000;
  std::vector<double> t_grid = inequal::default_t_grid();
  std::uint64_t seed = 42;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepRecord {
  Field field = Field::Complex;
  Index n = 0;
  Index k = 0;
  double radius = 0.0;
  std::size_t samples = 0;
  std::size_t cutlocus_count = 0;
  std::size_t semipara_violations = 0;
  std::size_t cosine_violations = 0;
  std::size_t cosine2_violations = 0;
  std::size_t anglesum_violations = 0;
  std::size_t quad_violations = 0;
  std::size_t midpoint_violations = 0;
  std::size_t tcontract_violations = 0;
  double worst_residual = 0.0;  // NaN when no sample was evaluable
  std::uint64_t seed = 0;

  double rate(std::size_t violations) const;
};

/// Triples are drawn from a ball around a fresh random center per radius.
/// A residual below -1e-9 is a violation; cut-locus samples are tallied
/// separately. Results do not depend on the thread count.
std::vector<SweepRecord> radius_sweep(const SweepConfig& config);

/// field,n,k,radius,samples,cutlocus_count,semipara_vr,cosine_vr,cosine2_vr,
/// anglesum_vr,quad_vr,midpoint_vr,tcontract_vr,worst_residual,seed
inline constexpr const char* kSweepCsvHeader =
    "field,n,k,radius,samples,cutlocus_count,semipara_vr,cosine_vr,"
    "cosine2_vr,anglesum_vr,quad_vr,midpoint_vr,tcontract_vr,worst_residual,"
    "seed";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);

// ---------------------------------------------------------------------------
// Witness hunting

/// Threshold for a reproducible violation.
inline constexpr double kWitnessTol = 1e-6;

struct Witness {
  Field field = Field::Complex;
  Index n = 0;
  Index k = 0;
  double radius = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t attempt = 0;
  std::vector<double> t_grid;
  Matrix a;
  Matrix b;
  Matrix c;
  inequal::TriangleReport report;
  std::vector<std::string> violated;  // residual names below -kWitnessTol
};

/// Tries up to max_tries triples, each in a ball around its own random
/// center. Throws NotFound when none has a residual below -kWitnessTol.
Witness find_violation(Index n, Index k, Field field, double radius,
                       std::uint64_t max_tries, std::uint64_t seed,
                       const std::vector<double>& t_grid =
                           inequal::default_t_grid());

/// Names of residuals in the report that are below -threshold.
std::vector<std::string> violated_residuals(const inequal::TriangleReport& r,
                                            double threshold);

std::string witness_to_json(const Witness& w);
Witness witness_from_json(const std::string& text);
/// Re-evaluates the stored triangle.
inequal::TriangleReport replay(const Witness& w);

}  // namespace grassgeo::experiments
