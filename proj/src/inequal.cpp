#include "grassgeo/inequal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

namespace grassgeo::inequal {

namespace {

double sq(double x) { return x * x; }

void require_distinct(double d_ab, double d_bc, double d_ca) {
  if (d_ab <= kPointTol || d_bc <= kPointTol || d_ca <= kPointTol) {
    throw Error(ErrorCode::DegenerateVertex,
                fmt::format("triangle has coincident vertices (sides {:g}, "
                            "{:g}, {:g})",
                            d_ab, d_bc, d_ca));
  }
}

CosineReport cosine_report_from(double alpha, double beta, double gamma,
                                double d_ab, double d_bc, double d_ca) {
  CosineReport r{};
  r.alpha = alpha;
  r.beta = beta;
  r.gamma = gamma;
  r.r_cosine =
      sq(d_ca) + sq(d_bc) - 2.0 * d_ca * d_bc * std::cos(gamma) - sq(d_ab);
  r.r_cosine2 = d_ab - (d_ca * std::cos(alpha) + d_bc * std::cos(beta));
  r.r_anglesum = alpha + beta + gamma - std::numbers::pi;
  return r;
}

double contraction_from(const Geodesic& ab, const Geodesic& ac, double d_bc,
                        double t) {
  return distance(ab.at(t), ac.at(t)) - t * d_bc;
}

}  // namespace

std::vector<double> default_t_grid() {
  return {0.25, 1.0 / 3.0, 0.5, 2.0 / 3.0, 0.75, 0.9};
}

double semi_parallelogram_gap(double d_mc, double d_ac, double d_bc,
                              double d_ab) {
  return sq(d_mc) - (0.5 * (sq(d_ac) + sq(d_bc)) - 0.25 * sq(d_ab));
}

double quadrilateral_gap(double d_cd, double d_ab, double d_ac, double d_bc,
                         double d_ad, double d_bd) {
  return (sq(d_cd) + sq(d_ab)) -
         (sq(d_ac) + sq(d_bc) + sq(d_ad) + sq(d_bd));
}

double semi_parallelogram_residual(const ProjectorPoint& a,
                                   const ProjectorPoint& b,
                                   const ProjectorPoint& c) {
  const ProjectorPoint m = midpoint(a, b);
  return semi_parallelogram_gap(distance(m, c), distance(a, c), distance(b, c),
                                distance(a, b));
}

CosineReport law_of_cosines_report(const ProjectorPoint& a,
                                   const ProjectorPoint& b,
                                   const ProjectorPoint& c) {
  const double d_ab = distance(a, b);
  const double d_bc = distance(b, c);
  const double d_ca = distance(c, a);
  require_distinct(d_ab, d_bc, d_ca);
  return cosine_report_from(vertex_angle(a, b, c), vertex_angle(b, a, c),
                            vertex_angle(c, a, b), d_ab, d_bc, d_ca);
}

Quadrilateral quadrilateral(const ProjectorPoint& a, const ProjectorPoint& b,
                            const ProjectorPoint& c) {
  ProjectorPoint m = midpoint(a, b);
  ProjectorPoint d = exp_map(log_map(m, c).scaled(-1.0));
  const double d_mc = distance(m, c);
  const double d_md = distance(m, d);
  const double r = quadrilateral_gap(distance(c, d), distance(a, b),
                                     distance(a, c), distance(b, c),
                                     distance(a, d), distance(b, d));
  return Quadrilateral{std::move(m), std::move(d), d_mc, d_md, r};
}

double quadrilateral_residual(const ProjectorPoint& a, const ProjectorPoint& b,
                              const ProjectorPoint& c) {
  return quadrilateral(a, b, c).residual;
}

double midpoint_contraction_residual(const ProjectorPoint& a,
                                     const ProjectorPoint& b,
                                     const ProjectorPoint& c) {
  return t_contraction_residual(a, b, c, 0.5);
}

double t_contraction_residual(const ProjectorPoint& a, const ProjectorPoint& b,
                              const ProjectorPoint& c, double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw Error(ErrorCode::BadParameter,
                fmt::format("contraction parameter {} outside [0, 1]", t));
  }
  const Geodesic ab(a, b);
  const Geodesic ac(a, c);
  return contraction_from(ab, ac, distance(b, c), t);
}

double convexity_probe(const ProjectorPoint& b1, const ProjectorPoint& b2,
                       const ProjectorPoint& c1, const ProjectorPoint& c2,
                       double t) {
  const double mixed =
      distance(t_geometric_mean(b1, b2, t), t_geometric_mean(c1, c2, t));
  return mixed - ((1.0 - t) * distance(b1, c1) + t * distance(b2, c2));
}

double IdentityResiduals::max() const {
  return std::max({linearity_t, linearity_s, reversal, nesting, chaining});
}

IdentityResiduals identity_suite(const ProjectorPoint& p,
                                 const ProjectorPoint& q, double s, double t) {
  const auto open_unit = [](double x) { return x > 0.0 && x < 1.0; };
  if (!open_unit(s) || !open_unit(t) || !(s + t <= 1.0)) {
    throw Error(ErrorCode::BadParameter,
                fmt::format("identity suite needs s, t in (0,1) and s+t <= 1; got "
                            "s = {}, t = {}",
                            s, t));
  }
  const Geodesic pq(p, q);
  const double d = pq.length();
  const ProjectorPoint pt = pq.at(t);
  const ProjectorPoint ps = pq.at(s);

  IdentityResiduals r{};
  r.linearity_t = std::abs(distance(p, pt) - t * d);
  r.linearity_s = std::abs(distance(p, ps) - s * d);
  r.reversal =
      frobenius_norm(pt.matrix() - t_geometric_mean(q, p, 1.0 - t).matrix());
  r.nesting = frobenius_norm(t_geometric_mean(p, pt, s).matrix() -
                             pq.at(s * t).matrix());
  r.chaining = frobenius_norm(t_geometric_mean(ps, q, t / (1.0 - s)).matrix() -
                              pq.at(s + t).matrix());
  return r;
}

double TriangleReport::worst_residual() const {
  double w = std::numeric_limits<double>::infinity();
  if (!valid) return w;
  for (const std::optional<double>& r : {r_cosine, r_cosine2, r_anglesum}) {
    if (r) w = std::min(w, *r);
  }
  w = std::min({w, r_semipara, r_quad, r_midpoint});
  for (const auto& [t, r] : r_tcontract) w = std::min(w, r);
  return w;
}

TriangleReport triangle_report(const ProjectorPoint& a, const ProjectorPoint& b,
                               const ProjectorPoint& c,
                               const std::vector<double>& t_grid) {
  TriangleReport rep;
  try {
    const Geodesic ab(a, b);
    const Geodesic ac(a, c);
    const Geodesic bc(b, c);
    rep.d_ab = ab.length();
    rep.d_ca = ac.length();
    rep.d_bc = bc.length();

    const ProjectorPoint m = ab.at(0.5);
    rep.r_semipara =
        semi_parallelogram_gap(distance(m, c), rep.d_ca, rep.d_bc, rep.d_ab);

    const ProjectorPoint d = exp_map(log_map(m, c).scaled(-1.0));
    rep.r_quad = quadrilateral_gap(distance(c, d), rep.d_ab, rep.d_ca,
                                   rep.d_bc, distance(a, d), distance(b, d));

    rep.r_midpoint = contraction_from(ab, ac, rep.d_bc, 0.5);
    rep.r_tcontract.reserve(t_grid.size());
    for (double t : t_grid) {
      rep.r_tcontract.emplace_back(t, contraction_from(ab, ac, rep.d_bc, t));
    }

    const bool distinct = rep.d_ab > kPointTol && rep.d_bc > kPointTol &&
                          rep.d_ca > kPointTol;
    if (distinct) {
      const CosineReport cr = cosine_report_from(
          vertex_angle(a, b, c), vertex_angle(b, a, c), vertex_angle(c, a, b),
          rep.d_ab, rep.d_bc, rep.d_ca);
      rep.alpha = cr.alpha;
      rep.beta = cr.beta;
      rep.gamma = cr.gamma;
      rep.r_cosine = cr.r_cosine;
      rep.r_cosine2 = cr.r_cosine2;
      rep.r_anglesum = cr.r_anglesum;
    }
    rep.valid = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CutLocus) throw;
    rep = TriangleReport{};
    rep.failure = e.what();
  }
  return rep;
}

}  // namespace grassgeo::inequal
