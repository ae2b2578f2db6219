#pragma once

// Signed residuals of the comparison inequalities for geodesic triangles in
// a Grassmannian. Each residual is arranged so that "inequality holds" means
// residual >= 0; inside small balls every residual should be >= -1e-9.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grassgeo/grassmann.hpp"

namespace grassgeo::inequal {

/// Violation threshold for randomized suites.
inline constexpr double kResidualTol = 1e-9;

/// {1/4, 1/3, 1/2, 2/3, 3/4, 0.9}
std::vector<double> default_t_grid();

// Residuals expressed through distances alone, shared by the per-inequality
// evaluators and the triangle report.

/// d^2(M,C) - [ (d^2(A,C) + d^2(B,C)) / 2 - d^2(A,B) / 4 ]
double semi_parallelogram_gap(double d_mc, double d_ac, double d_bc,
                              double d_ab);
/// [d^2(C,D) + d^2(A,B)] - [d^2(A,C) + d^2(B,C) + d^2(A,D) + d^2(B,D)]
double quadrilateral_gap(double d_cd, double d_ab, double d_ac, double d_bc,
                         double d_ad, double d_bd);

double semi_parallelogram_residual(const ProjectorPoint& a,
                                   const ProjectorPoint& b,
                                   const ProjectorPoint& c);

/// alpha, beta, gamma are the angles at A, B, C.
struct CosineReport {
  double alpha;
  double beta;
  double gamma;
  /// d^2(C,A) + d^2(C,B) - 2 d(C,A) d(C,B) cos(gamma) - d^2(B,A)
  double r_cosine;
  /// d(B,A) - [d(C,A) cos(alpha) + d(C,B) cos(beta)]
  double r_cosine2;
  /// alpha + beta + gamma - pi
  double r_anglesum;
};

/// Throws DegenerateVertex unless A, B, C are pairwise distinct.
CosineReport law_of_cosines_report(const ProjectorPoint& a,
                                   const ProjectorPoint& b,
                                   const ProjectorPoint& c);

/// M = A # B and D = Exp_M(-Log_M C), so M is the midpoint of C and D.
struct Quadrilateral {
  ProjectorPoint m;
  ProjectorPoint d;
  double d_mc;
  double d_md;
  double residual;
};

Quadrilateral quadrilateral(const ProjectorPoint& a, const ProjectorPoint& b,
                            const ProjectorPoint& c);
double quadrilateral_residual(const ProjectorPoint& a, const ProjectorPoint& b,
                              const ProjectorPoint& c);

/// d(A # B, A # C) - d(B,C) / 2
double midpoint_contraction_residual(const ProjectorPoint& a,
                                     const ProjectorPoint& b,
                                     const ProjectorPoint& c);

/// d(A #_t B, A #_t C) - t d(B,C), t in [0, 1].
double t_contraction_residual(const ProjectorPoint& a, const ProjectorPoint& b,
                              const ProjectorPoint& c, double t);

/// d(B1 #_t B2, C1 #_t C2) - [(1-t) d(B1,C1) + t d(B2,C2)]. No sign is
/// expected; both occur.
double convexity_probe(const ProjectorPoint& b1, const ProjectorPoint& b2,
                       const ProjectorPoint& c1, const ProjectorPoint& c2,
                       double t);

struct IdentityResiduals {
  double linearity_t;  // |d(P, P #_t Q) - t d(P,Q)|
  double linearity_s;  // same at s
  double reversal;     // ||P #_t Q - Q #_{1-t} P||_F
  double nesting;      // ||P #_s (P #_t Q) - P #_{st} Q||_F
  double chaining;     // ||(P #_s Q) #_{t/(1-s)} Q - P #_{s+t} Q||_F

  double max() const;
};

/// Requires s, t in (0, 1) and s + t <= 1; throws BadParameter otherwise.
IdentityResiduals identity_suite(const ProjectorPoint& p,
                                 const ProjectorPoint& q, double s, double t);

struct TriangleReport {
  bool valid = false;      // false when some logarithm hit the cut locus
  std::string failure;     // reason when !valid
  double d_ab = 0.0;
  double d_bc = 0.0;
  double d_ca = 0.0;
  // Unset when two vertices coincide.
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> gamma;
  std::optional<double> r_cosine;
  std::optional<double> r_cosine2;
  std::optional<double> r_anglesum;
  double r_semipara = 0.0;
  double r_quad = 0.0;
  double r_midpoint = 0.0;
  std::vector<std::pair<double, double>> r_tcontract;  // (t, residual)

  /// Smallest residual present; +inf when none.
  double worst_residual() const;
};

/// Evaluates everything for one triangle. Never throws CutLocus; such
/// triangles come back with valid == false.
TriangleReport triangle_report(const ProjectorPoint& a, const ProjectorPoint& b,
                               const ProjectorPoint& c,
                               const std::vector<double>& t_grid =
                                   default_t_grid());

}  // namespace grassgeo::inequal
