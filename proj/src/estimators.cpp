#include "invdist/estimators.hpp"

#include <cmath>
#include <random>

namespace invdist {

namespace {

double require_delta(const BoundaryFrame& f) {
  if (f.delta < kDeltaFloor)
    throw NumericError("delta floor violation", f.delta);
  return f.delta;
}

}  // namespace

double a_quantity(const Domain& domain, const PointC& z, const PointC& w) {
  if ((z - w).norm() == 0.0) return 0.0;
  BoundaryFrame fz = boundary_frame(domain, z);
  BoundaryFrame fw = boundary_frame(domain, w);
  const double dz = require_delta(fz);
  const double dw = require_delta(fw);
  const double dist = (z - w).norm();
  const double normal = normal_components(fz, z - w).complex_normal_mag;
  return (normal + dist * dist + dist * std::sqrt(dz)) /
         (std::sqrt(dz) * std::sqrt(dw));
}

std::pair<double, double> sandwich(double A, const EstimatorConstants& constants) {
  if (A < 0) throw ConfigError("sandwich: negative A");
  return {std::log1p(constants.c * A), std::log1p(constants.C * A)};
}

double cc_proxy(const Domain& domain, const PointC& p, const PointC& q) {
  if (std::abs(domain.rho(p)) > 1e-6 || std::abs(domain.rho(q)) > 1e-6)
    throw GeometryError("cc_proxy requires boundary points");
  if ((p - q).norm() == 0.0) return 0.0;
  DefiningValue dv = domain.defining_value(p);
  const VectorC eta = dv.gradient / dv.gradient.norm();
  const double normal = std::abs(inner(p - q, eta));
  return std::sqrt(normal + (p - q).squaredNorm());
}

double g_balogh_bonk(const Domain& domain, const PointC& z, const PointC& w) {
  BoundaryFrame fz = boundary_frame(domain, z);
  BoundaryFrame fw = boundary_frame(domain, w);
  const double dz = require_delta(fz);
  const double dw = require_delta(fw);
  if (!fz.unique_projection || !fw.unique_projection)
    throw GeometryError("g_balogh_bonk requires unique boundary projections");
  const double proxy = cc_proxy(domain, fz.projection, fw.projection);
  return std::log((proxy * proxy + std::max(dz, dw)) /
                  (std::sqrt(dz) * std::sqrt(dw)));
}

std::pair<double, double> h_quantities(const Domain& domain, const PointC& z,
                                       const PointC& w) {
  BoundaryFrame fz = boundary_frame(domain, z);
  const double dist = (z - w).norm();
  if (dist == 0.0) return {0.0, 0.0};
  NormalComponents nc = normal_components(fz, z - w);
  const double tail = dist * std::sqrt(std::max(fz.delta, 0.0));
  return {nc.complex_normal_mag + tail, nc.real_normal_mag + tail};
}

PairQuantities pair_quantities(const Domain& domain, const PointC& z, const PointC& w) {
  PairQuantities q;
  BoundaryFrame fz = boundary_frame(domain, z);
  BoundaryFrame fw = boundary_frame(domain, w);
  q.delta_z = fz.delta;
  q.delta_w = fw.delta;
  q.norm_diff = (z - w).norm();
  NormalComponents nc = normal_components(fz, z - w);
  q.normal_mag = nc.complex_normal_mag;
  const double tail = q.norm_diff * std::sqrt(std::max(fz.delta, 0.0));
  q.h = q.normal_mag + tail;
  q.h_real = nc.real_normal_mag + tail;
  if (q.norm_diff > 0.0) {
    require_delta(fz);
    require_delta(fw);
    q.A = (q.normal_mag + sqr(q.norm_diff) + tail) /
          (std::sqrt(q.delta_z) * std::sqrt(q.delta_w));
    if (fz.unique_projection && fw.unique_projection) {
      const double proxy = cc_proxy(domain, fz.projection, fw.projection);
      q.g = std::log((proxy * proxy + std::max(q.delta_z, q.delta_w)) /
                     (std::sqrt(q.delta_z) * std::sqrt(q.delta_w)));
    }
  }
  return q;
}

namespace {

// boundary point reached from p along the tangential direction tau at
// tangential scale s: p + s*tau pulled back onto {rho = 0} along the normal
PointC boundary_probe(const Domain& domain, const PointC& p, const VectorC& eta,
                      const VectorC& tau, double s) {
  PointC q = p + s * tau;
  // 1-D solve along the normal through q
  double lo = -2.0 * s, hi = 2.0 * s;
  auto f = [&](double t) { return domain.rho(q - t * eta); };
  double flo = f(lo), fhi = f(hi);
  int guard = 0;
  while (flo * fhi > 0 && guard++ < 60) {
    lo *= 1.5;
    hi *= 1.5;
    flo = f(lo);
    fhi = f(hi);
  }
  if (flo * fhi > 0) throw GeometryError("boundary probe failed to bracket");
  for (int it = 0; it < 80; ++it) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) * flo <= 0) hi = mid; else { lo = mid; flo = f(lo); }
  }
  return q - 0.5 * (lo + hi) * eta;
}

}  // namespace

std::vector<SlcScanRow> slc_ratio_scan(const Domain& domain, const PointC& p,
                                       const std::vector<double>& radii,
                                       std::uint64_t seed) {
  DefiningValue dv = domain.defining_value(p);
  if (std::abs(dv.value) > 1e-8)
    throw GeometryError("slc_ratio_scan requires a boundary point");
  const VectorC eta = dv.gradient / dv.gradient.norm();
  const Eigen::Index n = domain.dim();
  if (n < 2) throw GeometryError("scan needs complex tangent directions");
  // complex tangent basis at p
  MatrixC basis(n, n);
  basis.col(0) = eta;
  Eigen::Index col = 1;
  for (Eigen::Index j = 0; j < n && col < n; ++j) {
    VectorC e = VectorC::Zero(n);
    e(j) = 1.0;
    VectorC v = e;
    for (Eigen::Index k = 0; k < col; ++k)
      v -= inner(v, basis.col(k)) * basis.col(k);
    if (v.norm() < 1e-8) continue;
    basis.col(col++) = v / v.norm();
  }
  if (col != n) throw GeometryError("tangent basis construction failed");

  const double r_max = radii.front();
  std::vector<SlcScanRow> rows;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (double r : radii) {
    if (!(r > 0) || r > r_max + 1e-15)
      throw ConfigError("scan radii must be positive and decreasing");
    // direction resolution tied to the shell scale
    const int n_dirs =
        std::min(4096, std::max(64, static_cast<int>(64.0 * r_max / r)));
    SlcScanRow row;
    row.radius = r;
    double c3 = 1e300, c4 = 1e300, c2 = 1e300;
    int used = 0;
    for (int i = 0; i < n_dirs; ++i) {
      // random unit direction of the complex tangent (real dimension 2(n-1))
      VectorC tau = VectorC::Zero(n);
      for (Eigen::Index k = 1; k < n; ++k)
        tau += Complex(gauss(rng), gauss(rng)) * basis.col(k);
      if (tau.norm() < 1e-12) continue;
      tau /= tau.norm();
      for (double frac : {1.0, 0.5}) {
        const double s = frac * r / 2.0;
        PointC q;
        try {
          q = boundary_probe(domain, p, eta, tau, s);
        } catch (const std::exception&) {
          continue;
        }
        if ((q - p).norm() < 1e-14 || (q - p).norm() > r) continue;
        ++used;
        const double denom = (p - q).squaredNorm();
        const double ratio4 = std::abs(inner(p - q, eta)) / denom;
        c4 = std::min(c4, ratio4);
        // interior probe just inside the boundary point
        for (double depth : {1e-3 * s * s, 1e-2 * s * s}) {
          PointC w = q - depth * (domain.defining_value(q).gradient /
                                  domain.defining_value(q).gradient.norm());
          if (!domain.contains(w)) continue;
          const double d2 = (p - w).squaredNorm();
          if (d2 < 1e-28) continue;
          c3 = std::min(c3, std::abs(inner(p - w, eta)) / d2);
        }
        // c2 pairs: z on the inner-normal segment from p, w = z + tangential
        const double height = std::abs(inner(p - q, eta));
        for (double lift : {1.05, 1.5}) {
          PointC zz = p - (lift * height + 1e-6 * s * s) * eta;
          PointC ww = zz + (q - p) - inner(q - p, eta) * eta;
          if (!domain.contains(zz) || !domain.contains(ww)) continue;
          double d2 = (zz - ww).squaredNorm();
          if (d2 < 1e-28) continue;
          BoundaryFrame fz = boundary_frame(domain, zz);
          NormalComponents nc = normal_components(fz, zz - ww);
          double h = nc.complex_normal_mag +
                     std::sqrt(d2) * std::sqrt(std::max(fz.delta, 0.0));
          c2 = std::min(c2, h / d2);
        }
      }
    }
    if (used < n_dirs / 4)
      throw SamplingError("insufficient boundary probes in shell radius " +
                          std::to_string(r));
    // pairs degenerating to the boundary ratio are admissible c2 pairs
    row.c2 = std::min(c2, c3);
    row.c3 = c3;
    row.c4 = c4;
    row.samples = used;
    rows.push_back(row);
  }
  return rows;
}

std::vector<S9LevelRow> s9_counterexample(int levels, double eps0,
                                          double push_exponent) {
  if (levels < 1) throw ConfigError("s9 example needs at least one level");
  DomainSpec spec;
  spec.family = DomainFamily::LocalModelS9;
  spec.dim = 2;
  Domain domain(spec);
  std::vector<S9LevelRow> rows;
  double eps = eps0;
  for (int lvl = 0; lvl < levels; ++lvl, eps *= 0.5) {
    PointC deep(2), tangential(2);
    deep << Complex(-std::pow(eps, 3.0), 0.0), Complex(0.0, 0.0);
    tangential << Complex(-std::pow(eps, push_exponent), 0.0), Complex(eps, 0.0);
    if (!domain.contains(deep) || !domain.contains(tangential))
      throw GeometryError("s9 example points left the domain");
    // frame at the tangential point: its own distance decays like the push
    auto [h, h_real] = h_quantities(domain, tangential, deep);
    (void)h_real;
    S9LevelRow row;
    row.eps = eps;
    row.h = h;
    row.dist2 = (deep - tangential).squaredNorm();
    row.ratio = h / row.dist2;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace invdist
