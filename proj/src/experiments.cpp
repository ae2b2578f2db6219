#include "grassgeo/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "grassgeo/sampling.hpp"
#include "json_matrix.hpp"

#ifndef GRASSGEO_GOLDEN_DIR
#define GRASSGEO_GOLDEN_DIR "data/golden"
#endif

namespace grassgeo::experiments {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(ErrorCode::Parse,
                fmt::format("{}: missing member \"{}\"", where, key));
  }
  return obj.at(key);
}

ExpectationKind parse_kind(const std::string& s, const std::string& where) {
  if (s == "exact-value") return ExpectationKind::ExactValue;
  if (s == "multiset") return ExpectationKind::Multiset;
  if (s == "inequality-direction") return ExpectationKind::InequalityDirection;
  throw Error(ErrorCode::Parse,
              fmt::format("{}: unknown expectation kind '{}'", where, s));
}

Expectation parse_expectation(const json& e, Field field,
                              const std::string& where) {
  Expectation x;
  x.kind = parse_kind(member(e, "kind", where).get<std::string>(), where);
  x.source = e.value("source", std::string("unspecified"));
  switch (x.kind) {
    case ExpectationKind::ExactValue:
      x.quantities = {member(e, "quantity", where).get<std::string>()};
      x.tol = member(e, "tol", where).get<double>();
      if (e.contains("matrix")) {
        x.matrix = detail::matrix_from_json(e.at("matrix"), field);
      } else {
        x.values = {member(e, "value", where).get<double>()};
      }
      break;
    case ExpectationKind::Multiset:
      x.quantities = member(e, "quantities", where).get<std::vector<std::string>>();
      x.values = member(e, "values", where).get<std::vector<double>>();
      x.tol = member(e, "tol", where).get<double>();
      if (x.quantities.size() != x.values.size()) {
        throw Error(ErrorCode::Parse,
                    fmt::format("{}: multiset sizes differ", where));
      }
      break;
    case ExpectationKind::InequalityDirection: {
      x.quantities = {member(e, "quantity", where).get<std::string>()};
      const std::string dir = member(e, "direction", where).get<std::string>();
      if (dir != "positive" && dir != "negative") {
        throw Error(ErrorCode::Parse,
                    fmt::format("{}: direction must be positive|negative", where));
      }
      x.expect_positive = dir == "positive";
      break;
    }
  }
  return x;
}

// Largest |phase| of (I - 2Q)(I - 2P).
double rotation_phase(const ProjectorPoint& p, const ProjectorPoint& q) {
  return max_abs_phase(unitary_eigen(relative_rotation(p, q), 1e-8));
}

double phase_margin(
    std::initializer_list<std::pair<const ProjectorPoint*, const ProjectorPoint*>>
        pairs) {
  double worst = 0.0;
  for (const auto& [p, q] : pairs) worst = std::max(worst, rotation_phase(*p, *q));
  return kPi - kDefaultCutTol - worst;
}

const ProjectorPoint& point(const std::map<std::string, ProjectorPoint>& pts,
                            const std::string& name) {
  const auto it = pts.find(name);
  if (it == pts.end()) {
    throw Error(ErrorCode::Parse, fmt::format("golden case lacks input '{}'", name));
  }
  return it->second;
}

Quantities evaluate_triangle(const std::map<std::string, ProjectorPoint>& pts) {
  const ProjectorPoint& a = point(pts, "A");
  const ProjectorPoint& b = point(pts, "B");
  const ProjectorPoint& c = point(pts, "C");
  Quantities q;
  const Geodesic ab(a, b);
  const double d_ab = ab.length();
  const double d_ac = distance(a, c);
  const double d_bc = distance(b, c);
  const ProjectorPoint m = ab.at(0.5);
  const double d_mc = distance(m, c);
  q.scalars["d(A,B)"] = d_ab;
  q.scalars["d(A,C)"] = d_ac;
  q.scalars["d(B,C)"] = d_bc;
  q.scalars["d(M,C)"] = d_mc;
  q.scalars["semipara"] = inequal::semi_parallelogram_gap(d_mc, d_ac, d_bc, d_ab);
  q.scalars["d(B,C)-pi/4"] = d_bc - kPi / 4.0;
  q.scalars["phase_margin"] = phase_margin({{&a, &b}, {&a, &c}, {&b, &c}});
  q.matrices["M"] = m.matrix();

  const ProjectorPoint back = ab.at(-0.5);
  const double d_back_c = distance(back, c);
  q.scalars["d(M_back,C)"] = d_back_c;
  q.scalars["semipara(M_back)"] =
      inequal::semi_parallelogram_gap(d_back_c, d_ac, d_bc, d_ab);
  q.matrices["M_back"] = back.matrix();
  return q;
}

Quantities evaluate_quadruple(const std::map<std::string, ProjectorPoint>& pts) {
  const ProjectorPoint& b1 = point(pts, "B1");
  const ProjectorPoint& b2 = point(pts, "B2");
  const ProjectorPoint& c1 = point(pts, "C1");
  const ProjectorPoint& c2 = point(pts, "C2");
  Quantities q;
  const double d11 = distance(b1, c1);
  const double d22 = distance(b2, c2);
  const ProjectorPoint mb = midpoint(b1, b2);
  const ProjectorPoint mc = midpoint(c1, c2);
  const double midmid = distance(mb, mc);
  q.scalars["d(B1,C1)"] = d11;
  q.scalars["d(B2,C2)"] = d22;
  q.scalars["d(B1,B2)"] = distance(b1, b2);
  q.scalars["d(C1,C2)"] = distance(c1, c2);
  q.scalars["d(B1#B2,C1#C2)"] = midmid;
  q.scalars["gap"] = midmid - 0.5 * (d11 + d22);
  q.scalars["phase_margin"] =
      phase_margin({{&b1, &b2}, {&c1, &c2}, {&b1, &c1}, {&b2, &c2}});
  if (b1.n() == 2 && b1.k() == 1 && b1.field() == Field::Real) {
    const double oracle =
        line_distance(line_midpoint(line_angle(b1.matrix()), line_angle(b2.matrix())),
                      line_midpoint(line_angle(c1.matrix()), line_angle(c2.matrix())));
    q.scalars["midmid-oracle"] = midmid - oracle;
    q.scalars["midmid_oracle"] = oracle;
  }
  q.matrices["B1#B2"] = mb.matrix();
  q.matrices["C1#C2"] = mc.matrix();
  return q;
}

std::string fmt_value(double v) { return fmt::format("{:.6g}", v); }

CheckResult check_expectation(const Expectation& x, const Quantities& q) {
  CheckResult r;
  const std::string tag = fmt::format("[{}] ", x.source);
  switch (x.kind) {
    case ExpectationKind::ExactValue: {
      const std::string& name = x.quantities.front();
      r.label = tag + name;
      if (x.matrix) {
        const auto it = q.matrices.find(name);
        if (it == q.matrices.end()) {
          r.detail = "matrix quantity not available";
          return r;
        }
        if (it->second.rows() != x.matrix->rows() ||
            it->second.cols() != x.matrix->cols()) {
          r.detail = "shape mismatch";
          return r;
        }
        const double err =
            (it->second.data() - x.matrix->data()).cwiseAbs().maxCoeff();
        r.pass = err <= x.tol;
        r.detail = fmt::format("max entry error {} (tol {})", fmt_value(err),
                               fmt_value(x.tol));
        return r;
      }
      const auto it = q.scalars.find(name);
      if (it == q.scalars.end()) {
        r.detail = "quantity not available";
        return r;
      }
      const double err = std::abs(it->second - x.values.front());
      r.pass = err <= x.tol;
      r.detail = fmt::format("computed {} expected {} (tol {})",
                             fmt_value(it->second), fmt_value(x.values.front()),
                             fmt_value(x.tol));
      return r;
    }
    case ExpectationKind::Multiset: {
      std::vector<double> got;
      std::string names;
      for (const std::string& name : x.quantities) {
        names += (names.empty() ? "" : ", ") + name;
        const auto it = q.scalars.find(name);
        if (it == q.scalars.end()) {
          r.label = tag + "{" + names + "}";
          r.detail = fmt::format("quantity {} not available", name);
          return r;
        }
        got.push_back(it->second);
      }
      r.label = tag + "{" + names + "}";
      std::vector<double> want = x.values;
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      double err = 0.0;
      for (std::size_t i = 0; i < got.size(); ++i) {
        err = std::max(err, std::abs(got[i] - want[i]));
      }
      r.pass = err <= x.tol;
      std::string got_s, want_s;
      for (std::size_t i = 0; i < got.size(); ++i) {
        got_s += (i ? ", " : "") + fmt_value(got[i]);
        want_s += (i ? ", " : "") + fmt_value(want[i]);
      }
      r.detail = fmt::format("computed {{{}}} expected {{{}}} (tol {})", got_s,
                             want_s, fmt_value(x.tol));
      return r;
    }
    case ExpectationKind::InequalityDirection: {
      const std::string& name = x.quantities.front();
      r.label = tag + name + (x.expect_positive ? " > 0" : " < 0");
      const auto it = q.scalars.find(name);
      if (it == q.scalars.end()) {
        r.detail = "quantity not available";
        return r;
      }
      r.pass = x.expect_positive ? it->second > 0.0 : it->second < 0.0;
      r.detail = fmt::format("computed {}", fmt_value(it->second));
      return r;
    }
  }
  return r;
}

}  // namespace

GoldenCase load_golden_case(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::Parse,
                fmt::format("cannot open golden case '{}'", path.string()));
  }
  const std::string where = path.filename().string();
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, fmt::format("{}: {}", where, e.what()));
  }
  GoldenCase g;
  try {
    g.name = member(doc, "name", where).get<std::string>();
    g.description = doc.value("description", std::string());
    g.field = parse_field(member(doc, "field", where).get<std::string>());
    g.validate_tol = doc.value("validate_tol", 1e-3);
    const std::string cons = member(doc, "construction", where).get<std::string>();
    if (cons == "triangle") {
      g.construction = Construction::Triangle;
    } else if (cons == "quadruple") {
      g.construction = Construction::Quadruple;
    } else {
      throw Error(ErrorCode::Parse,
                  fmt::format("{}: unknown construction '{}'", where, cons));
    }
    for (const auto& [name, data] : member(doc, "inputs", where).items()) {
      g.inputs.emplace(name, detail::matrix_from_json(data, g.field));
    }
    for (const json& e : member(doc, "expect", where)) {
      g.expectations.push_back(parse_expectation(e, g.field, where));
    }
    if (doc.contains("report")) {
      for (const json& r : doc.at("report")) {
        g.report.push_back(ReportItem{member(r, "quantity", where).get<std::string>(),
                                      r.value("scale", 1.0),
                                      r.value("note", std::string())});
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, fmt::format("{}: {}", where, e.what()));
  }
  return g;
}

std::vector<GoldenCase> load_golden_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(ErrorCode::Parse,
                fmt::format("golden directory '{}' not found", dir.string()));
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<GoldenCase> out;
  out.reserve(files.size());
  for (const auto& f : files) out.push_back(load_golden_case(f));
  return out;
}

std::filesystem::path default_golden_dir() { return GRASSGEO_GOLDEN_DIR; }

double line_angle(const Matrix& p) {
  return 0.5 * std::atan2(2.0 * p(0, 1).real(), (p(0, 0) - p(1, 1)).real());
}

namespace {
// Difference of line angles reduced to [-pi/2, pi/2].
double wrap_line(double delta) { return std::remainder(delta, kPi); }
}  // namespace

double line_distance(double phi, double psi) {
  return std::numbers::sqrt2 * std::abs(wrap_line(psi - phi));
}

double line_midpoint(double phi, double psi) {
  return phi + 0.5 * wrap_line(psi - phi);
}

Quantities evaluate(const GoldenCase& golden) {
  std::map<std::string, ProjectorPoint> pts;
  for (const auto& [name, m] : golden.inputs) {
    pts.emplace(name, validate_projector(m, golden.validate_tol));
  }
  return golden.construction == Construction::Triangle ? evaluate_triangle(pts)
                                                       : evaluate_quadruple(pts);
}

bool GoldenResult::pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

GoldenResult run_golden(const GoldenCase& golden) {
  const auto start = std::chrono::steady_clock::now();
  GoldenResult res;
  res.name = golden.name;
  Quantities q;
  try {
    q = evaluate(golden);
  } catch (const Error& e) {
    res.checks.push_back(
        CheckResult{"evaluation", fmt::format("{}: {}", to_string(e.code()), e.what()),
                    false});
    return res;
  }
  for (const Expectation& x : golden.expectations) {
    res.checks.push_back(check_expectation(x, q));
  }
  for (const ReportItem& item : golden.report) {
    const auto it = q.scalars.find(item.quantity);
    const double v = it == q.scalars.end() ? kNaN : item.scale * it->second;
    const std::string label = item.scale == 1.0
                                  ? item.quantity
                                  : fmt::format("{}*{}", fmt_value(item.scale),
                                                item.quantity);
    res.report.emplace_back(label, v);
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
  return res;
}

std::vector<GoldenResult> reproduce_examples(const std::filesystem::path& dir) {
  std::vector<GoldenResult> out;
  for (const GoldenCase& g : load_golden_dir(dir)) out.push_back(run_golden(g));
  return out;
}

void require_pass(const GoldenResult& result) {
  for (const CheckResult& c : result.checks) {
    if (!c.pass) {
      throw Error(ErrorCode::GoldenMismatch,
                  fmt::format("{}: {} ({})", result.name, c.label, c.detail));
    }
  }
}

// ---------------------------------------------------------------------------

double SweepRecord::rate(std::size_t violations) const {
  return samples == 0 ? 0.0
                      : static_cast<double>(violations) / static_cast<double>(samples);
}

namespace {

struct SampleOutcome {
  bool cut = false;
  bool semipara = false, cosine = false, cosine2 = false, anglesum = false;
  bool quad = false, midpoint = false, tcontract = false;
  double worst = std::numeric_limits<double>::infinity();
};

std::uint64_t stream_key(std::size_t radius_index, std::uint64_t low) {
  return (static_cast<std::uint64_t>(radius_index) << 32) | low;
}

constexpr std::uint64_t kCenterStream = 0xFFFFFFFFull;

SampleOutcome evaluate_sample(const sampling::BallSpec& ball,
                              const std::vector<double>& t_grid,
                              sampling::RngStream rng) {
  SampleOutcome o;
  const std::vector<ProjectorPoint> pts = sampling::sample_ball(ball, 3, rng);
  const inequal::TriangleReport r =
      inequal::triangle_report(pts[0], pts[1], pts[2], t_grid);
  if (!r.valid) {
    o.cut = true;
    return o;
  }
  const double tol = -inequal::kResidualTol;
  o.semipara = r.r_semipara < tol;
  o.cosine = r.r_cosine && *r.r_cosine < tol;
  o.cosine2 = r.r_cosine2 && *r.r_cosine2 < tol;
  o.anglesum = r.r_anglesum && *r.r_anglesum < tol;
  o.quad = r.r_quad < tol;
  o.midpoint = r.r_midpoint < tol;
  for (const auto& [t, v] : r.r_tcontract) o.tcontract = o.tcontract || v < tol;
  o.worst = r.worst_residual();
  return o;
}

template <typename Task>
void parallel_for(std::size_t count, unsigned threads, Task&& task) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<SweepRecord> radius_sweep(const SweepConfig& config) {
  for (std::size_t i = 0; i < config.radii.size(); ++i) {
    if (!(config.radii[i] > 0.0) ||
        (i > 0 && !(config.radii[i] > config.radii[i - 1]))) {
      throw Error(ErrorCode::BadParameter,
                  "sweep radii must be positive and strictly ascending");
    }
  }
  std::vector<SweepRecord> records;
  records.reserve(config.radii.size());
  for (std::size_t ri = 0; ri < config.radii.size(); ++ri) {
    sampling::RngStream center_rng(config.seed, stream_key(ri, kCenterStream));
    const sampling::BallSpec ball(
        sampling::random_projector(config.n, config.k, config.field, center_rng),
        config.radii[ri], sampling::RadiusPolicy::Unbounded);

    std::vector<SampleOutcome> outcomes(config.samples_per_radius);
    parallel_for(outcomes.size(), config.threads, [&](std::size_t j) {
      outcomes[j] = evaluate_sample(
          ball, config.t_grid, sampling::RngStream(config.seed, stream_key(ri, j)));
    });

    SweepRecord rec;
    rec.field = config.field;
    rec.n = config.n;
    rec.k = config.k;
    rec.radius = config.radii[ri];
    rec.samples = outcomes.size();
    rec.seed = config.seed;
    double worst = std::numeric_limits<double>::infinity();
    bool any = false;
    for (const SampleOutcome& o : outcomes) {
      if (o.cut) {
        ++rec.cutlocus_count;
        continue;
      }
      any = true;
      rec.semipara_violations += o.semipara;
      rec.cosine_violations += o.cosine;
      rec.cosine2_violations += o.cosine2;
      rec.anglesum_violations += o.anglesum;
      rec.quad_violations += o.quad;
      rec.midpoint_violations += o.midpoint;
      rec.tcontract_violations += o.tcontract;
      worst = std::min(worst, o.worst);
    }
    rec.worst_residual = any ? worst : kNaN;
    records.push_back(rec);
  }
  return records;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRecord& r : records) {
    out << fmt::format("{},{},{},{:.17g},{},{},{:.10g},{:.10g},{:.10g},{:.10g},"
                       "{:.10g},{:.10g},{:.10g},{:.17g},{}\n",
                       to_string(r.field), r.n, r.k, r.radius, r.samples,
                       r.cutlocus_count, r.rate(r.semipara_violations),
                       r.rate(r.cosine_violations), r.rate(r.cosine2_violations),
                       r.rate(r.anglesum_violations), r.rate(r.quad_violations),
                       r.rate(r.midpoint_violations),
                       r.rate(r.tcontract_violations), r.worst_residual, r.seed);
  }
}

// ---------------------------------------------------------------------------

std::vector<std::string> violated_residuals(const inequal::TriangleReport& r,
                                            double threshold) {
  std::vector<std::string> out;
  if (!r.valid) return out;
  const auto test = [&](const char* name, double v) {
    if (v < -threshold) out.emplace_back(name);
  };
  test("semipara", r.r_semipara);
  if (r.r_cosine) test("cosine", *r.r_cosine);
  if (r.r_cosine2) test("cosine2", *r.r_cosine2);
  if (r.r_anglesum) test("anglesum", *r.r_anglesum);
  test("quad", r.r_quad);
  test("midpoint", r.r_midpoint);
  for (const auto& [t, v] : r.r_tcontract) {
    if (v < -threshold) out.push_back(fmt::format("tcontract@{:.6g}", t));
  }
  return out;
}

Witness find_violation(Index n, Index k, Field field, double radius,
                       std::uint64_t max_tries, std::uint64_t seed,
                       const std::vector<double>& t_grid) {
  if (max_tries < 1) {
    throw Error(ErrorCode::BadParameter, "max_tries must be at least 1");
  }
  for (std::uint64_t attempt = 0; attempt < max_tries; ++attempt) {
    sampling::RngStream rng(seed, attempt);
    const sampling::BallSpec ball(sampling::random_projector(n, k, field, rng),
                                  radius, sampling::RadiusPolicy::Unbounded);
    const std::vector<ProjectorPoint> pts = sampling::sample_ball(ball, 3, rng);
    inequal::TriangleReport rep =
        inequal::triangle_report(pts[0], pts[1], pts[2], t_grid);
    std::vector<std::string> bad = violated_residuals(rep, kWitnessTol);
    if (!bad.empty()) {
      Witness w;
      w.field = field;
      w.n = n;
      w.k = k;
      w.radius = radius;
      w.seed = seed;
      w.attempt = attempt;
      w.t_grid = t_grid;
      w.a = pts[0].matrix();
      w.b = pts[1].matrix();
      w.c = pts[2].matrix();
      w.report = std::move(rep);
      w.violated = std::move(bad);
      return w;
    }
  }
  throw Error(ErrorCode::NotFound,
              fmt::format("no residual below -{:g} in {} tries at radius {}",
                          kWitnessTol, max_tries, radius));
}

namespace {

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      if (m.field() == Field::Real) {
        row.push_back(m(i, j).real());
      } else {
        row.push_back({m(i, j).real(), m(i, j).imag()});
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json report_to_json(const inequal::TriangleReport& r) {
  json j;
  j["valid"] = r.valid;
  j["d_ab"] = r.d_ab;
  j["d_bc"] = r.d_bc;
  j["d_ca"] = r.d_ca;
  j["r_semipara"] = r.r_semipara;
  j["r_quad"] = r.r_quad;
  j["r_midpoint"] = r.r_midpoint;
  if (r.r_cosine) j["r_cosine"] = *r.r_cosine;
  if (r.r_cosine2) j["r_cosine2"] = *r.r_cosine2;
  if (r.r_anglesum) j["r_anglesum"] = *r.r_anglesum;
  json tc = json::array();
  for (const auto& [t, v] : r.r_tcontract) tc.push_back({t, v});
  j["r_tcontract"] = std::move(tc);
  return j;
}

}  // namespace

std::string witness_to_json(const Witness& w) {
  json j;
  j["field"] = std::string(to_string(w.field));
  j["n"] = w.n;
  j["k"] = w.k;
  j["radius"] = w.radius;
  j["seed"] = w.seed;
  j["attempt"] = w.attempt;
  j["t_grid"] = w.t_grid;
  j["A"] = matrix_to_json(w.a);
  j["B"] = matrix_to_json(w.b);
  j["C"] = matrix_to_json(w.c);
  j["violated"] = w.violated;
  j["report"] = report_to_json(w.report);
  return j.dump(2) + "\n";
}

Witness witness_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, fmt::format("witness: {}", e.what()));
  }
  try {
    Witness w;
    w.field = parse_field(j.at("field").get<std::string>());
    w.n = j.at("n").get<Index>();
    w.k = j.at("k").get<Index>();
    w.radius = j.at("radius").get<double>();
    w.seed = j.at("seed").get<std::uint64_t>();
    w.attempt = j.at("attempt").get<std::uint64_t>();
    w.t_grid = j.at("t_grid").get<std::vector<double>>();
    w.a = detail::matrix_from_json(j.at("A"), w.field);
    w.b = detail::matrix_from_json(j.at("B"), w.field);
    w.c = detail::matrix_from_json(j.at("C"), w.field);
    w.violated = j.at("violated").get<std::vector<std::string>>();
    w.report = replay(w);
    return w;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, fmt::format("witness: {}", e.what()));
  }
}

inequal::TriangleReport replay(const Witness& w) {
  return inequal::triangle_report(validate_projector(w.a, 1e-10),
                                  validate_projector(w.b, 1e-10),
                                  validate_projector(w.c, 1e-10), w.t_grid);
}

}  // namespace grassgeo::experiments
