#pragma once

#include "invdist/bounds.hpp"
#include "invdist/boundary.hpp"
#include "invdist/domain.hpp"

namespace invdist {

// Scalar quantities attached to a pair of points; the frame side
// convention is the first argument throughout.
struct PairQuantities {
  double norm_diff = 0.0;   // |z - w|
  double normal_mag = 0.0;  // |(z - w)_z|
  double delta_z = 0.0;
  double delta_w = 0.0;
  double A = 0.0;
  double g = 0.0;       // Balogh-Bonk quantity with the Box-Ball proxy
  double h = 0.0;
  double h_real = 0.0;
};

// A(z,w) = (|(z-w)_z| + |z-w|^2 + |z-w| sqrt(delta_z)) / sqrt(delta_z delta_w),
// frame taken at z.
double a_quantity(const Domain& domain, const PointC& z, const PointC& w);

// (log(1 + c A), log(1 + C A)).
std::pair<double, double> sandwich(double A, const EstimatorConstants& constants);

// Box-Ball equivalent of the boundary Carnot-Caratheodory distance:
// sqrt( |(p-q)_p| + |p-q|^2 ) for boundary points p, q.
double cc_proxy(const Domain& domain, const PointC& p, const PointC& q);

// log( (cc_proxy(pi z, pi w)^2 + max(delta_z, delta_w)) / sqrt(delta_z delta_w) ).
// Throws GeometryError when either projection is non-unique.
double g_balogh_bonk(const Domain& domain, const PointC& z, const PointC& w);

// h = |(z-w)_z| + |z-w| sqrt(delta_z); h_real uses the real normal
// component instead.
std::pair<double, double> h_quantities(const Domain& domain, const PointC& z,
                                       const PointC& w);

PairQuantities pair_quantities(const Domain& domain, const PointC& z, const PointC& w);

// Boundary ratio scan around p for the strict-linear-convexity constants:
// per shell radius r,
//   c2 — inf over interior pairs (z on the inner-normal segment from p,
//        w a tangential offset) of h(z,w)/|z-w|^2,
//   c3 — inf over interior probes near the boundary of |(p-w)_p| / |p-w|^2,
//   c4 — the same inf over boundary probes.
// The probe directions live in the complex tangent at p with angular
// resolution proportional to the shell radius (resolving the infimum at
// scale r needs direction spacing O(r)).
struct SlcScanRow {
  double radius = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
  int samples = 0;
};

std::vector<SlcScanRow> slc_ratio_scan(const Domain& domain, const PointC& p,
                                       const std::vector<double>& radii,
                                       std::uint64_t seed = 11u);

// The local model counterexample sequence: level n uses eps_n = eps0 / 2^n,
// the deep point (-eps_n^3, 0) and the tangential point (0, eps_n) pushed
// inward by eps_n^push_exponent. Reports h/|z-w|^2 with the frame at the
// tangential point.
struct S9LevelRow {
  double eps = 0.0;
  double h = 0.0;
  double dist2 = 0.0;
  double ratio = 0.0;
};

std::vector<S9LevelRow> s9_counterexample(int levels, double eps0 = 0.1,
                                          double push_exponent = 5.0);

}  // namespace invdist
