#include "invdist/geodesics.hpp"

#include <cmath>

namespace invdist {

namespace {

constexpr double kGolden = 0.6180339887498949;

// delta along the slice plane: point = center + s * direction
double slice_delta(const Domain& domain, const DiscMap& disc, Complex s) {
  PointC p = disc.center + s * disc.direction;
  if (!domain.contains(p)) return -1.0;
  return boundary_frame(domain, p).delta;
}

}  // namespace

DiscMap ball_slice(double s, const PointC& q_unit, const VectorC& u_unit) {
  if (!(s > 0.0 && s <= 1.0)) throw ConfigError("slice parameter must lie in (0, 1]");
  DiscMap disc;
  disc.center = (1.0 - s) * q_unit;
  disc.direction = u_unit;
  disc.a = std::sqrt(std::max(0.0, 1.0 - disc.center.squaredNorm()));
  disc.b = 0.0;
  return disc;
}

DiscMap reparametrize_max_delta(const Domain& domain, const DiscMap& disc, int grid) {
  // search the full slice of the domain by the disc's line for the
  // max-delta point
  const double r_cap = 2.0 * domain.circumradius();
  double best = -1.0;
  Complex best_s = disc.b;
  const int radial = std::max(16, grid / 4);
  for (int ir = 0; ir <= radial; ++ir) {
    const double rr = r_cap * ir / radial;
    const int angular = ir == 0 ? 1 : grid;
    for (int ia = 0; ia < angular; ++ia) {
      const double th = 2.0 * M_PI * ia / angular;
      const Complex s = rr * Complex(std::cos(th), std::sin(th));
      const double d = slice_delta(domain, disc, s);
      if (d > best) {
        best = d;
        best_s = s;
      }
    }
  }
  if (best < 0.0) throw GeometryError("disc image does not meet the domain");
  // golden refinement along the two real axes of the slice plane
  for (int pass = 0; pass < 3; ++pass) {
    for (Complex dir : {Complex(1, 0), Complex(0, 1)}) {
      const double span = r_cap / radial;
      double lo = -span, hi = span;
      auto f = [&](double t) { return slice_delta(domain, disc, best_s + t * dir); };
      double x1 = hi - kGolden * (hi - lo), x2 = lo + kGolden * (hi - lo);
      double f1 = f(x1), f2 = f(x2);
      for (int it = 0; it < 48; ++it) {
        if (f1 < f2) {
          lo = x1; x1 = x2; f1 = f2;
          x2 = lo + kGolden * (hi - lo); f2 = f(x2);
        } else {
          hi = x2; x2 = x1; f2 = f1;
          x1 = hi - kGolden * (hi - lo); f1 = f(x1);
        }
      }
      best_s += (f1 > f2 ? x1 : x2) * dir;
      best = std::max(best, std::max(f1, f2));
    }
  }
  DiscMap out;
  out.center = disc.center + best_s * disc.direction;
  out.direction = disc.direction;
  out.b = 0.0;
  // radius of the full slice from the max-delta point: the largest affine
  // disc inside the slice of the domain
  double lo = 0.0, hi = r_cap;
  auto inside = [&](double r) {
    for (int ia = 0; ia < 64; ++ia) {
      const double th = 2.0 * M_PI * ia / 64;
      if (slice_delta(domain, out, r * Complex(std::cos(th), std::sin(th))) < 0.0)
        return false;
    }
    return true;
  };
  for (int it = 0; it < 80; ++it) {
    double mid = 0.5 * (lo + hi);
    (inside(mid) ? lo : hi) = mid;
  }
  out.a = lo;
  if (!(lo > 0.0))
    throw GeometryError("max-delta maximizer degenerated to the boundary circle");
  return out;
}

DiscInvariants disc_invariants(const Domain& domain, const DiscMap& disc, int grid) {
  DiscInvariants out;
  // boundary ring (exact diameter for affine discs via antipodal pairs)
  std::vector<PointC> ring;
  ring.reserve(grid);
  for (int i = 0; i < grid; ++i) {
    const double th = 2.0 * M_PI * i / grid;
    ring.push_back(disc.at(Complex(std::cos(th), std::sin(th))));
  }
  double diam = 0.0;
  for (int i = 0; i < grid; ++i)
    for (int j = i + 1; j < grid; ++j)
      diam = std::max(diam, (ring[i] - ring[j]).norm());
  out.diameter = diam;
  // coarse-grid diameter for the resolution check
  double diam_coarse = 0.0;
  for (int i = 0; i < grid; i += 2)
    for (int j = i + 2; j < grid; j += 2)
      diam_coarse = std::max(diam_coarse, (ring[i] - ring[j]).norm());
  out.resolution_warning = std::abs(diam - diam_coarse) > 1e-3 * std::max(diam, 1e-12);

  out.max_derivative = disc.derivative().norm();  // constant for affine discs

  // max delta over the disc grid, then golden refinement of the best cell
  const int radial = std::max(8, grid / 4);
  double best = -1.0;
  Complex best_zeta = 0.0;
  for (int ir = 0; ir <= radial; ++ir) {
    const double rr = (1.0 - 1e-9) * ir / radial;
    const int angular = ir == 0 ? 1 : grid / 4;
    for (int ia = 0; ia < angular; ++ia) {
      const double th = 2.0 * M_PI * ia / angular;
      const Complex zeta = rr * Complex(std::cos(th), std::sin(th));
      const PointC p = disc.at(zeta);
      if (!domain.contains(p)) continue;
      const double d = boundary_frame(domain, p).delta;
      if (d > best) {
        best = d;
        best_zeta = zeta;
      }
    }
  }
  if (best < 0.0) throw GeometryError("disc image does not meet the domain");
  for (Complex dir : {Complex(1, 0), Complex(0, 1)}) {
    const double span = 1.0 / radial;
    double lo = -span, hi = span;
    auto f = [&](double t) {
      const Complex zeta = best_zeta + t * dir;
      if (std::abs(zeta) >= 1.0) return -1.0;
      const PointC p = disc.at(zeta);
      if (!domain.contains(p)) return -1.0;
      return boundary_frame(domain, p).delta;
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
  }
  out.max_delta = best;

  // tangency at the distinguished point
  const PointC origin = disc.at(0.0);
  BoundaryFrame frame = boundary_frame(domain, origin);
  const VectorC dphi = disc.derivative();
  out.tangency_defect = std::abs(inner(dphi, frame.outer_normal)) / dphi.norm();
  return out;
}

double theorem5_balance(const Domain& domain, const DiscMap& disc, const PointC& z,
                        const PointC& w) {
  const double dist = (z - w).norm();
  if (dist == 0.0) throw GeometryError("theorem5_balance: z == w");
  // both points must sit on the disc's complex line
  for (const PointC* pt : {&z, &w}) {
    const VectorC d = *pt - disc.center;
    const VectorC residual = d - inner(d, disc.direction) * disc.direction;
    if (residual.norm() > 1e-8)
      throw GeometryError("theorem5_balance: point off the disc image");
  }
  BoundaryFrame fz = boundary_frame(domain, z);
  const double normal = normal_components(fz, z - w).complex_normal_mag;
  const double lhs = normal / dist + std::sqrt(fz.delta) + dist;
  DiscInvariants inv = disc_invariants(domain, disc, 64);
  return lhs / inv.diameter;
}

LengthRatios length_ratios(const Domain& domain, const SampledCurve& curve) {
  if (curve.size() < 2) throw GeometryError("length_ratios: degenerate curve");
  const double gap = (curve.points.front() - curve.points.back()).norm();
  if (gap < 1e-14) throw GeometryError("length_ratios: zero endpoint gap");
  LengthRatios out;
  out.length = curve.euclidean_length();
  double dmax = 0.0;
  for (const auto& p : curve.points)
    dmax = std::max(dmax, boundary_frame(domain, p).delta);
  out.max_delta = dmax;
  out.gehring = out.length / gap;
  out.prop3 = out.length / std::sqrt(dmax);
  return out;
}

}  // namespace invdist
