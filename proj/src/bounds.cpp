#include "invdist/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace invdist {

namespace {

constexpr double kGolden = 0.6180339887498949;

double require_delta(const Domain& domain, const PointC& z) {
  BoundaryFrame f = boundary_frame(domain, z);
  if (f.delta < kDeltaFloor)
    throw NumericError("point closer to the boundary than the delta floor",
                       f.delta);
  return f.delta;
}

// max of rho over the boundary circle of the disc z + r e^{i theta} u,
// located by a coarse sweep plus golden-section refinement.
double circle_max_rho(const Domain& domain, const PointC& z, const VectorC& u,
                      double r) {
  constexpr int kSweep = 96;
  double best = -1e300;
  int best_i = 0;
  for (int i = 0; i < kSweep; ++i) {
    double th = 2.0 * M_PI * i / kSweep;
    double val = domain.rho(z + (r * Complex(std::cos(th), std::sin(th))) * u);
    if (val > best) {
      best = val;
      best_i = i;
    }
  }
  double lo = 2.0 * M_PI * (best_i - 1) / kSweep;
  double hi = 2.0 * M_PI * (best_i + 1) / kSweep;
  auto f = [&](double th) {
    return domain.rho(z + (r * Complex(std::cos(th), std::sin(th))) * u);
  };
  double x1 = hi - kGolden * (hi - lo), x2 = lo + kGolden * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 40; ++it) {
    if (f1 < f2) {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + kGolden * (hi - lo); f2 = f(x2);
    } else {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - kGolden * (hi - lo); f1 = f(x1);
    }
  }
  best = std::max({best, f1, f2});
  // The families are subharmonic along affine discs except for the bump
  // term; sweep a coarse interior grid for the perturbed family.
  if (domain.spec().family == DomainFamily::PerturbedBall) {
    for (int ri = 1; ri < 8; ++ri)
      for (int i = 0; i < 16; ++i) {
        double th = 2.0 * M_PI * i / 16;
        double rr = r * ri / 8.0;
        best = std::max(best, domain.rho(z + (rr * Complex(std::cos(th), std::sin(th))) * u));
      }
  }
  return best;
}

}  // namespace

Backend backend_from_string(const std::string& name) {
  if (name == "exact-ball") return Backend::ExactBall;
  if (name == "interval") return Backend::Interval;
  throw ConfigError("unknown backend '" + name + "' (expected exact-ball or interval)");
}

std::string backend_name(Backend b) {
  return b == Backend::ExactBall ? "exact-ball" : "interval";
}

double affine_disc_radius(const Domain& domain, const PointC& z, const VectorC& v) {
  if (!(v.norm() > 0)) throw ConfigError("affine_disc_radius: zero direction");
  if (!domain.contains(z)) throw GeometryError("affine_disc_radius: point not interior");
  const VectorC u = v / v.norm();
  const DomainFamily family = domain.spec().family;
  if (family == DomainFamily::UnitBall || family == DomainFamily::Ellipsoid) {
    // quadric families: max_theta rho(z + r e^{i theta} u) = rho(z) + 2 Q r + P r^2
    const PointC zb = domain.base_point(z);
    const VectorC ub = domain.base_direction(u);
    double p = 0.0;
    Complex q = 0.0;
    for (Eigen::Index j = 0; j < zb.size(); ++j) {
      const double a = family == DomainFamily::UnitBall
                           ? 1.0
                           : domain.spec().coeffs[static_cast<std::size_t>(j)];
      p += a * std::norm(ub(j));
      q += a * ub(j) * std::conj(zb(j));
    }
    const double qa = std::abs(q);
    const double rho0 = domain.rho(z);
    return (std::sqrt(std::max(0.0, qa * qa - p * rho0)) - qa) / p;
  }
  double lo = 0.0;
  double hi = 2.0 * domain.circumradius() + 1.0;
  if (circle_max_rho(domain, z, u, hi) < 0)
    throw GeometryError("domain appears unbounded along the disc");
  for (int it = 0; it < 60 && (hi - lo) > 1e-12 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    (circle_max_rho(domain, z, u, mid) < 0 ? lo : hi) = mid;
  }
  return lo;
}

double royden_upper(const Domain& domain, const PointC& z, const VectorC& v) {
  if (v.norm() == 0.0) return 0.0;
  // for the untransformed ball the largest disc radius is closed-form:
  // sup_theta |z + R e^{i theta} u| = 1 at R solving a quadratic
  if (domain.spec().family == DomainFamily::UnitBall && !domain.has_premap()) {
    const VectorC u = v / v.norm();
    const double zu = std::abs(inner(z, u));
    const double r = std::sqrt(std::max(0.0, 1.0 - z.squaredNorm() + zu * zu)) - zu;
    return v.norm() / r;
  }
  return v.norm() / affine_disc_radius(domain, z, v);
}

IntervalValue royden_interval(const Domain& domain, const PointC& z, const VectorC& v) {
  if (v.norm() == 0.0) return {0.0, 0.0};
  require_delta(domain, z);
  IntervalValue out;
  out.lower = royden_ball(z, v, domain.enclosing_center(), domain.enclosing_radius());
  out.upper = royden_upper(domain, z, v);
  return out;
}

double ma_estimator(const BoundaryFrame& frame, const VectorC& v) {
  if (frame.delta < kDeltaFloor)
    throw NumericError("ma_estimator below delta floor", frame.delta);
  NormalComponents nc = normal_components(frame, v);
  return nc.complex_normal_mag / frame.delta + v.norm() / std::sqrt(frame.delta);
}

double ma_estimator(const Domain& domain, const PointC& z, const VectorC& v) {
  return ma_estimator(boundary_frame(domain, z), v);
}

namespace {

class PathFunctional {
 public:
  PathFunctional(const Domain& domain, Backend backend)
      : domain_(domain), backend_(backend) {}

  double metric(const PointC& z, const VectorC& v) const {
    if (backend_ == Backend::ExactBall) {
      if (domain_.spec().family != DomainFamily::UnitBall || domain_.has_premap())
        throw CapabilityError("exact-ball backend requires the unit ball");
      return royden_ball(z, v);
    }
    return royden_upper(domain_, z, v);
  }

  // 8-point Gauss-Legendre along the sub-segment a + [t0, t1] (b - a)
  double gauss8(const PointC& a, const VectorC& v, double t0, double t1) const {
    static const double xs[4] = {0.1834346424956498, 0.5255324099163290,
                                 0.7966664774136267, 0.9602898564975363};
    static const double ws[4] = {0.3626837833783620, 0.3137066458778873,
                                 0.2223810344533745, 0.1012285362903763};
    const double mid = 0.5 * (t0 + t1), half = 0.5 * (t1 - t0);
    double sum = 0.0;
    for (int i = 0; i < 4; ++i)
      for (double sgn : {-1.0, 1.0})
        sum += ws[i] * metric(a + (mid + sgn * half * xs[i]) * v, v);
    return sum * half;
  }

  // adaptive bisection; the metric spikes like 1/delta near the boundary,
  // so fixed-order quadrature on a whole segment can miss most of the mass
  double segment_length(const PointC& a, const PointC& b, double tol) const {
    const VectorC v = b - a;
    struct Piece {
      double t0, t1, estimate;
      int depth;
    };
    const double whole = gauss8(a, v, 0.0, 1.0);
    std::vector<Piece> stack{{0.0, 1.0, whole, 0}};
    double total = 0.0;
    while (!stack.empty()) {
      Piece p = stack.back();
      stack.pop_back();
      const double mid = 0.5 * (p.t0 + p.t1);
      const double left = gauss8(a, v, p.t0, mid);
      const double right = gauss8(a, v, mid, p.t1);
      if (p.depth >= 24 ||
          std::abs(left + right - p.estimate) <= tol * (std::abs(left) + std::abs(right))) {
        total += left + right;
      } else {
        stack.push_back({p.t0, mid, left, p.depth + 1});
        stack.push_back({mid, p.t1, right, p.depth + 1});
      }
    }
    return total;
  }

  double polyline_length(const std::vector<PointC>& nodes, double tol) const {
    double sum = 0.0;
    for (std::size_t i = 1; i < nodes.size(); ++i)
      sum += segment_length(nodes[i - 1], nodes[i], tol);
    return sum;
  }

  bool interior(const PointC& z) const { return domain_.contains(z); }

 private:
  const Domain& domain_;
  Backend backend_;
};

constexpr double kDescentTol = 2e-3;  // quadrature tolerance while shaping
constexpr double kFinalTol = 2e-6;    // quadrature tolerance for the result

// golden-section line search for node k along direction dir
double line_search(const PathFunctional& f, std::vector<PointC>& nodes,
                   std::size_t k, const VectorC& dir, double span) {
  const PointC base = nodes[k];
  auto local = [&](double t) {
    nodes[k] = base + t * dir;
    if (!f.interior(nodes[k])) return 1e300;
    return f.segment_length(nodes[k - 1], nodes[k], kDescentTol) +
           f.segment_length(nodes[k], nodes[k + 1], kDescentTol);
  };
  double lo = -span, hi = span;
  double x1 = hi - kGolden * (hi - lo), x2 = lo + kGolden * (hi - lo);
  double f1 = local(x1), f2 = local(x2);
  for (int it = 0; it < 24; ++it) {
    if (f1 > f2) {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + kGolden * (hi - lo); f2 = local(x2);
    } else {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - kGolden * (hi - lo); f1 = local(x1);
    }
  }
  const double t_best = f1 < f2 ? x1 : x2;
  const double f_best = std::min(f1, f2);
  const double f_zero = local(0.0);
  if (f_best < f_zero) {
    nodes[k] = base + t_best * dir;
    return f_zero - f_best;
  }
  nodes[k] = base;
  return 0.0;
}

// coordinate descent sweeps over the interior nodes
double relax(const PathFunctional& f, std::vector<PointC>& nodes, double span) {
  const Eigen::Index n = nodes.front().size();
  double total = f.polyline_length(nodes, kDescentTol);
  for (int sweep = 0; sweep < 24; ++sweep) {
    double improved = 0.0;
    for (std::size_t k = 1; k + 1 < nodes.size(); ++k) {
      for (Eigen::Index j = 0; j < n; ++j) {
        for (Complex dir : {Complex(1, 0), Complex(0, 1)}) {
          VectorC d = VectorC::Zero(n);
          d(j) = dir;
          improved += line_search(f, nodes, k, d, span);
        }
      }
    }
    total = f.polyline_length(nodes, kDescentTol);
    if (improved < 1e-5 * std::max(total, 1e-12)) break;
  }
  return total;
}

std::vector<PointC> subdivide(const std::vector<PointC>& nodes) {
  std::vector<PointC> out;
  out.reserve(2 * nodes.size() - 1);
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    out.push_back(nodes[i]);
    out.push_back(0.5 * (nodes[i] + nodes[i + 1]));
  }
  out.push_back(nodes.back());
  return out;
}

// coarse-to-fine descent seeded with a given 3-node polyline; returns the
// tight-quadrature value of the final polyline
double optimize_path(const PathFunctional& f, std::vector<PointC> nodes,
                     int segments, double scale) {
  double span = 0.5 * scale;
  while (true) {
    relax(f, nodes, span);
    if (static_cast<int>(nodes.size()) - 1 >= segments) break;
    nodes = subdivide(nodes);
    span *= 0.6;
  }
  return f.polyline_length(nodes, kFinalTol);
}

}  // namespace

PathBound kobayashi_upper_path(const Domain& domain, const PointC& z,
                               const PointC& w, int segments, Backend backend) {
  if (segments < 1) throw ConfigError("kobayashi_upper_path: segments must be >= 1");
  require_delta(domain, z);
  require_delta(domain, w);
  PathFunctional f(domain, backend);
  if ((z - w).norm() == 0.0) return {0.0, true};
  if (segments == 1) return {f.segment_length(z, w, kFinalTol), true};

  std::vector<PointC> straight{z, 0.5 * (z + w), w};
  const double straight_bound = f.polyline_length(straight, kFinalTol);
  const double scale = (z - w).norm();

  double best = 1e300;
  bool optimized = false;
  try {
    best = optimize_path(f, straight, segments, scale);
    optimized = true;
  } catch (const std::exception&) {
  }
  try {
    // boundary-avoiding arc: bow the midpoint toward the enclosing center
    PointC mid = 0.5 * (z + w);
    const PointC c = domain.enclosing_center();
    PointC bowed = mid + 0.35 * (c - mid);
    if (!domain.contains(bowed)) bowed = mid;
    double arc = optimize_path(f, {z, bowed, w}, segments, scale);
    if (arc < best) best = arc;
    optimized = true;
  } catch (const std::exception&) {
  }
  if (!optimized) return {straight_bound, false};
  return {std::min(best, straight_bound), true};
}

LowerBound kobayashi_lower(const Domain& domain, const PointC& z, const PointC& w,
                           const EstimatorConstants& constants) {
  const double dz = require_delta(domain, z);
  const double dw = require_delta(domain, w);
  LowerBound out;
  out.certified = kobayashi_ball(z, w, domain.enclosing_center(),
                                 domain.enclosing_radius());
  const double dist = (z - w).norm();
  const double c = constants.c;
  out.nt_product = std::log((1.0 + c * dist / std::sqrt(dz)) *
                            (1.0 + c * dist / std::sqrt(dw)));
  BoundaryFrame fz = boundary_frame(domain, z);
  const double normal = normal_components(fz, z - w).complex_normal_mag;
  out.normal_form = std::log1p(c * normal / (std::sqrt(dz) * std::sqrt(dw)));
  out.value = out.certified;
  return out;
}

double dini_upper_estimator(const Domain& domain, const PointC& z, const PointC& w,
                            double C) {
  const double dz = require_delta(domain, z);
  const double dw = require_delta(domain, w);
  return std::log1p(C * (z - w).norm() / (std::sqrt(dz) * std::sqrt(dw)));
}

ComparisonGap comparison_gap(const Domain& domain, const PointC& z, const PointC& w,
                             double C0) {
  const double dz = require_delta(domain, z);
  const double dw = require_delta(domain, w);
  const double dist = (z - w).norm();
  ComparisonGap out;
  out.g = dist == 0.0
              ? 0.0
              : dist / (std::sqrt(dist) + std::sqrt(dz) + std::sqrt(dw));
  out.l_minus_k_bound = C0 * out.g;
  out.k_over_c_bound = C0;
  return out;
}

IntervalValue kobayashi_interval(const Domain& domain, const PointC& z,
                                 const PointC& w, Backend backend, int segments,
                                 const EstimatorConstants& constants) {
  if (backend == Backend::ExactBall) {
    if (domain.spec().family != DomainFamily::UnitBall || domain.has_premap())
      throw CapabilityError("exact-ball backend requires the unit ball");
    const double k = kobayashi_ball(z, w);
    return {k, k};
  }
  IntervalValue out;
  out.lower = kobayashi_lower(domain, z, w, constants).value;
  out.upper = kobayashi_upper_path(domain, z, w, segments, backend).value;
  return out;
}

}  // namespace invdist
