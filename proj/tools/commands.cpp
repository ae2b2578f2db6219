#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "grassgeo/experiments.hpp"
#include "grassgeo/inequal.hpp"
#include "grassgeo/matrix_file.hpp"
#include "grassgeo/sampling.hpp"

namespace grassgeo::cli {

namespace {

constexpr double kFileTol = 1e-3;

std::string num(double x) { return fmt::format("{:.12g}", x); }

std::string join(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + num(xs[i]);
  return s;
}

ProjectorPoint load_point(const std::string& path, double tol) {
  return validate_projector(read_matrix_file(path), tol);
}

void print_report(std::ostream& out, const inequal::TriangleReport& r) {
  out << "valid=" << (r.valid ? 1 : 0) << '\n';
  if (!r.valid) {
    out << "failure=" << r.failure << '\n';
    return;
  }
  out << "d_ab=" << num(r.d_ab) << '\n'
      << "d_bc=" << num(r.d_bc) << '\n'
      << "d_ca=" << num(r.d_ca) << '\n';
  const auto opt = [&](const char* name, const std::optional<double>& v) {
    out << name << '=' << (v ? num(*v) : std::string("undefined")) << '\n';
  };
  opt("alpha", r.alpha);
  opt("beta", r.beta);
  opt("gamma", r.gamma);
  out << "r_semipara=" << num(r.r_semipara) << '\n';
  opt("r_cosine", r.r_cosine);
  opt("r_cosine2", r.r_cosine2);
  opt("r_anglesum", r.r_anglesum);
  out << "r_quad=" << num(r.r_quad) << '\n'
      << "r_midpoint=" << num(r.r_midpoint) << '\n';
  for (const auto& [t, v] : r.r_tcontract) {
    out << fmt::format("r_tcontract@{:.6g}={}\n", t, num(v));
  }
  out << "worst_residual=" << num(r.worst_residual()) << '\n';
}

int report_error(const Error& e, std::ostream& err) {
  switch (e.code()) {
    case ErrorCode::CutLocus:
    case ErrorCode::NegativeEigenvalue:
      err << "cut locus: " << e.what();
      if (e.phase()) err << fmt::format(" (phase {:.12g})", *e.phase());
      err << '\n';
      return kExitCutLocus;
    case ErrorCode::GoldenMismatch:
      err << "golden mismatch: " << e.what() << '\n';
      return kExitGolden;
    case ErrorCode::NotFound:
      err << "not found: " << e.what() << '\n';
      return kExitNotFound;
    default:
      err << to_string(e.code()) << ": " << e.what() << '\n';
      return kExitInput;
  }
}

void write_text(const std::string& path, const std::string& text,
                std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::Parse, fmt::format("cannot write '{}'", path));
  f << text;
}

std::vector<double> default_sweep_radii() {
  std::vector<double> r;
  for (int i = 1; i <= 15; ++i) r.push_back(0.1 * i);
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Geodesics, means and comparison inequalities on Grassmannians"};
  app.name("grassgeo");
  app.require_subcommand(1);

  double tol = kFileTol;
  std::vector<std::string> files;
  double t = 0.5;
  bool extend = false;
  std::string out_path;
  std::vector<double> t_grid = inequal::default_t_grid();
  std::string golden_dir = experiments::default_golden_dir().string();
  std::string field_name = "complex";
  Index n = 2;
  Index k = 1;
  std::vector<double> radii = default_sweep_radii();
  double radius = sampling::default_radius(Field::Complex);
  bool radius_given = false;
  std::size_t samples = 1000;
  std::size_t count = 10;
  std::uint64_t seed = 42;
  std::uint64_t max_tries = 100000;
  unsigned threads = 0;
  std::string replay_path;

  CLI::App* distance_cmd = app.add_subcommand("distance", "Distance and principal angles");
  distance_cmd->add_option("files", files, "Two matrix files")->expected(2)->required();
  distance_cmd->add_option("--tol", tol, "Projector validation tolerance");

  CLI::App* mean_cmd = app.add_subcommand("mean", "t-geometric mean of two points");
  mean_cmd->add_option("files", files, "Two matrix files")->expected(2)->required();
  mean_cmd->add_option("--t", t, "Geodesic parameter");
  mean_cmd->add_flag("--extend", extend, "Allow t in [-0.5, 1.5]");
  mean_cmd->add_option("--out", out_path, "Output matrix file (default stdout)");
  mean_cmd->add_option("--tol", tol, "Projector validation tolerance");

  CLI::App* triangle_cmd = app.add_subcommand("triangle", "Residuals of every inequality");
  triangle_cmd->add_option("files", files, "Three matrix files")->expected(3)->required();
  triangle_cmd->add_option("--t-grid", t_grid, "Contraction parameters")->delimiter(',');
  triangle_cmd->add_option("--tol", tol, "Projector validation tolerance");

  CLI::App* verify_cmd = app.add_subcommand("verify-examples", "Check the golden cases");
  verify_cmd->add_option("--golden-dir", golden_dir, "Directory of golden cases");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Violation rates against ball radius");
  sweep_cmd->add_option("--field", field_name, "real or complex");
  sweep_cmd->add_option("--n", n, "Ambient dimension");
  sweep_cmd->add_option("--k", k, "Rank");
  sweep_cmd->add_option("--radius", radii, "Ascending radii")->delimiter(',');
  sweep_cmd->add_option("--samples", samples, "Triples per radius");
  sweep_cmd->add_option("--t-grid", t_grid, "Contraction parameters")->delimiter(',');
  sweep_cmd->add_option("--seed", seed, "Random seed");
  sweep_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");
  sweep_cmd->add_option("--out", out_path, "CSV file (default stdout)");

  CLI::App* sample_cmd = app.add_subcommand("sample", "Write random points from a ball");
  sample_cmd->add_option("--field", field_name, "real or complex");
  sample_cmd->add_option("--n", n, "Ambient dimension");
  sample_cmd->add_option("--k", k, "Rank");
  sample_cmd->add_option("--radius", radius, "Ball radius")
      ->each([&](const std::string&) { radius_given = true; });
  sample_cmd->add_option("--count", count, "Number of points");
  sample_cmd->add_option("--seed", seed, "Random seed");
  sample_cmd->add_option("--out", out_path, "Output directory")->required();

  CLI::App* witness_cmd = app.add_subcommand("witness", "Search for a violated inequality");
  witness_cmd->add_option("--field", field_name, "real or complex");
  witness_cmd->add_option("--n", n, "Ambient dimension");
  witness_cmd->add_option("--k", k, "Rank");
  witness_cmd->add_option("--radius", radius, "Ball radius");
  witness_cmd->add_option("--max-tries", max_tries, "Triples to try");
  witness_cmd->add_option("--seed", seed, "Random seed");
  witness_cmd->add_option("--t-grid", t_grid, "Contraction parameters")->delimiter(',');
  witness_cmd->add_option("--out", out_path, "Witness JSON file (default stdout)");
  witness_cmd->add_option("--replay", replay_path, "Re-evaluate a stored witness");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (distance_cmd->parsed()) {
      const ProjectorPoint p = load_point(files[0], tol);
      const ProjectorPoint q = load_point(files[1], tol);
      const double d = distance(p, q);
      out << "n=" << p.n() << '\n'
          << "k=" << p.k() << '\n'
          << "d=" << num(d) << '\n'
          << "principal_angles=" << join(principal_angles(p, q)) << '\n';
      return kExitOk;
    }

    if (mean_cmd->parsed()) {
      if (!extend && !(t >= 0.0 && t <= 1.0)) {
        err << fmt::format("--t {} outside [0, 1]; pass --extend for [-0.5, 1.5]\n", t);
        return kExitInput;
      }
      const ProjectorPoint p = load_point(files[0], tol);
      const ProjectorPoint q = load_point(files[1], tol);
      write_text(out_path, format_matrix_file(t_geometric_mean(p, q, t).matrix()), out);
      return kExitOk;
    }

    if (triangle_cmd->parsed()) {
      for (double s : t_grid) {
        if (!(s >= 0.0 && s <= 1.0)) {
          err << fmt::format("t-grid value {} outside [0, 1]\n", s);
          return kExitInput;
        }
      }
      const inequal::TriangleReport r = inequal::triangle_report(
          load_point(files[0], tol), load_point(files[1], tol),
          load_point(files[2], tol), t_grid);
      print_report(out, r);
      if (!r.valid) {
        err << "cut locus: " << r.failure << '\n';
        return kExitCutLocus;
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      bool all = true;
      for (const experiments::GoldenResult& g :
           experiments::reproduce_examples(golden_dir)) {
        out << fmt::format("case={} status={} seconds={:.3f}\n", g.name,
                           g.pass() ? "PASS" : "FAIL", g.seconds);
        for (const experiments::CheckResult& c : g.checks) {
          out << fmt::format("  {} {}: {}\n", c.pass ? "ok  " : "FAIL", c.label,
                             c.detail);
        }
        for (const auto& [label, v] : g.report) {
          out << fmt::format("  info {}={}\n", label, num(v));
        }
        if (!g.pass()) {
          all = false;
          const auto bad = std::find_if(g.checks.begin(), g.checks.end(),
                                        [](const auto& c) { return !c.pass; });
          err << fmt::format("golden mismatch in {}: {} ({})\n", g.name,
                             bad->label, bad->detail);
        }
      }
      return all ? kExitOk : kExitGolden;
    }

    if (sweep_cmd->parsed()) {
      experiments::SweepConfig cfg;
      cfg.n = n;
      cfg.k = k;
      cfg.field = parse_field(field_name);
      cfg.radii = radii;
      cfg.samples_per_radius = samples;
      cfg.t_grid = t_grid;
      cfg.seed = seed;
      cfg.threads = threads;
      std::ostringstream csv;
      experiments::write_sweep_csv(csv, experiments::radius_sweep(cfg));
      write_text(out_path, csv.str(), out);
      return kExitOk;
    }

    if (sample_cmd->parsed()) {
      const Field field = parse_field(field_name);
      if (!radius_given) radius = sampling::default_radius(field);
      sampling::RngStream rng(seed, 0);
      const sampling::BallSpec ball(sampling::random_projector(n, k, field, rng),
                                    radius);
      const std::vector<ProjectorPoint> pts = sampling::sample_ball(ball, count, rng);
      std::filesystem::create_directories(out_path);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto path =
            std::filesystem::path(out_path) / fmt::format("point_{:04d}.json", i);
        write_matrix_file(path, pts[i].matrix());
        out << "file=" << path.string() << '\n';
      }
      return kExitOk;
    }

    if (witness_cmd->parsed()) {
      if (!replay_path.empty()) {
        std::ifstream in(replay_path);
        if (!in) {
          err << fmt::format("cannot open witness '{}'\n", replay_path);
          return kExitInput;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        const experiments::Witness w = experiments::witness_from_json(buf.str());
        print_report(out, w.report);
        return kExitOk;
      }
      const experiments::Witness w = experiments::find_violation(
          n, k, parse_field(field_name), radius, max_tries, seed, t_grid);
      write_text(out_path, experiments::witness_to_json(w), out);
      if (!out_path.empty()) {
        out << "attempt=" << w.attempt << '\n';
        for (const std::string& v : w.violated) out << "violated=" << v << '\n';
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    return report_error(e, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace grassgeo::cli
