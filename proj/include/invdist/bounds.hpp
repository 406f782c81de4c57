#pragma once

#include "invdist/ball.hpp"
#include "invdist/boundary.hpp"
#include "invdist/domain.hpp"

namespace invdist {

// Certified lower/upper pair bracketing a metric or distance value.
struct IntervalValue {
  double lower = 0.0;
  double upper = 0.0;

  bool valid(double slack = 1e-12) const {
    return std::isfinite(lower) && std::isfinite(upper) && lower >= 0.0 &&
           lower <= upper + slack;
  }
};

// Tunable constants of the displayed estimates; the paper proves their
// existence without numeric values, so they default to the last
// calibration output (0.01 when uncalibrated) and estimator outputs are
// labeled non-certified.
struct EstimatorConstants {
  double c = 0.01;
  double C = 1.0;
};

enum class Backend { ExactBall, Interval };
Backend backend_from_string(const std::string& name);  // "exact-ball" | "interval"
std::string backend_name(Backend b);

// Largest radius R such that the affine disc z + R*zeta*unit(v), |zeta|<1,
// stays inside the domain; found by bisection on the worst boundary-circle
// direction.
double affine_disc_radius(const Domain& domain, const PointC& z, const VectorC& v);

// Certified upper bound |v| / affine_disc_radius for the Kobayashi-Royden
// metric (the competitor disc is explicit).
double royden_upper(const Domain& domain, const PointC& z, const VectorC& v);

// Bracket for the Kobayashi-Royden metric: the enclosing-ball metric from
// below (distance-decreasing inclusion), the affine-disc bound from above.
IntervalValue royden_interval(const Domain& domain, const PointC& z, const VectorC& v);

// |v_z| / delta + |v| / sqrt(delta) with the boundary frame at z.
double ma_estimator(const Domain& domain, const PointC& z, const VectorC& v);
double ma_estimator(const BoundaryFrame& frame, const VectorC& v);

struct PathBound {
  double value = 0.0;
  bool optimized = true;  // false when descent failed and the straight
                          // polyline bound is reported instead
};

// Minimized integrated upper-Royden length over piecewise-linear paths
// with `segments` pieces; local descent from the straight segment and from
// a boundary-avoiding arc, the better of the two. Upper bound for the
// Kobayashi distance; with Backend::ExactBall the integrand is the exact
// ball metric.
PathBound kobayashi_upper_path(const Domain& domain, const PointC& z,
                               const PointC& w, int segments,
                               Backend backend = Backend::Interval);

struct LowerBound {
  double certified = 0.0;      // exact distance of the enclosing ball
  double nt_product = 0.0;     // log((1+c|z-w|/sqrt(dz))(1+c|z-w|/sqrt(dw)))
  double normal_form = 0.0;    // log(1+c|(z-w)_z|/(sqrt(dz) sqrt(dw)))
  double value = 0.0;          // = certified; the usable lower bound

  double best_estimate() const {
    return std::max({certified, nt_product, normal_form});
  }
};

// The two estimator forms are evaluated with the supplied constants and
// reported as-is (non-certified); only the enclosing-ball term is a
// certified bound.
LowerBound kobayashi_lower(const Domain& domain, const PointC& z, const PointC& w,
                           const EstimatorConstants& constants = {});

// log(1 + C |z-w| / (sqrt(delta_z) sqrt(delta_w))); Dini-smooth upper
// estimator, non-certified for general C.
double dini_upper_estimator(const Domain& domain, const PointC& z, const PointC& w,
                            double C);

struct ComparisonGap {
  double g = 0.0;               // |z-w| / (|z-w|^{1/2} + sqrt(dz) + sqrt(dw))
  double l_minus_k_bound = 0.0; // C0 * g : additive comparison slack bound
  double k_over_c_bound = 0.0;  // C0     : multiplicative comparison bound
};

ComparisonGap comparison_gap(const Domain& domain, const PointC& z, const PointC& w,
                             double C0 = 1.0);

// Bracket for the Kobayashi distance under the selected backend
// (collapses to the exact value on the unit ball).
IntervalValue kobayashi_interval(const Domain& domain, const PointC& z,
                                 const PointC& w, Backend backend,
                                 int segments = 32,
                                 const EstimatorConstants& constants = {});

}  // namespace invdist
