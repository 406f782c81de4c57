#include "invdist/transforms.hpp"

#include <cmath>

namespace invdist {

Complex mobius(double t, Complex zeta) {
  return (zeta + t) / (1.0 + t * zeta);
}

PointC ball_automorphism(double t, const PointC& z) {
  const Complex den = 1.0 + t * z(0);
  if (std::abs(den) < 1e-14)
    throw NumericError("ball automorphism singularity: 1 + t z_1 ~ 0",
                       std::abs(den));
  PointC out(z.size());
  out(0) = (z(0) + t) / den;
  const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
  for (Eigen::Index j = 1; j < z.size(); ++j) out(j) = s * z(j) / den;
  return out;
}

RigidMap RigidMap::inverse() const {
  RigidMap inv;
  inv.unitary = unitary.adjoint();
  inv.translation = -(inv.unitary * translation);
  return inv;
}

namespace {

// Unitary with U eta = e_1 (columns: eta completed to an orthonormal basis,
// then adjoint).
MatrixC unitary_to_e1(const VectorC& eta) {
  const Eigen::Index n = eta.size();
  MatrixC basis(n, n);
  basis.col(0) = eta / eta.norm();
  Eigen::Index col = 1;
  for (Eigen::Index j = 0; j < n && col < n; ++j) {
    VectorC e = VectorC::Zero(n);
    e(j) = 1.0;
    VectorC v = e;
    for (Eigen::Index k = 0; k < col; ++k)
      v -= inner(v, basis.col(k)) * basis.col(k);
    double nv = v.norm();
    if (nv < 1e-8) continue;
    basis.col(col++) = v / nv;
  }
  if (col != n) throw GeometryError("failed to complete unitary basis");
  return basis.adjoint();
}

}  // namespace

RigidMap normalize_boundary(const Domain& domain, const PointC& p) {
  DefiningValue dv = domain.defining_value(p);
  if (std::abs(dv.value) > 1e-8)
    throw GeometryError("normalize_boundary requires a boundary point");
  if (dv.gradient.norm() < 1e-12)
    throw GeometryError("degenerate gradient at boundary point");
  RigidMap map;
  map.unitary = unitary_to_e1(dv.gradient);
  VectorC e1 = VectorC::Zero(domain.dim());
  e1(0) = 1.0;
  map.translation = e1 - map.unitary * p;
  return map;
}

NormalizedDomain osculating_normalization(const Domain& domain, const PointC& p) {
  const DomainSpec& spec = domain.spec();
  NormalizedDomain out;
  switch (spec.family) {
    case DomainFamily::UnitBall: {
      RigidMap rigid = normalize_boundary(domain, p);
      out.map = rigid.affine();
      out.domain = domain.transformed(out.map);
      out.exact = true;
      break;
    }
    case DomainFamily::Ellipsoid: {
      // T = diag(sqrt(a_j)) maps the ellipsoid onto the unit ball exactly
      MatrixC t = MatrixC::Zero(spec.dim, spec.dim);
      for (int j = 0; j < spec.dim; ++j) t(j, j) = std::sqrt(spec.coeffs[j]);
      PointC tp = t * p;
      MatrixC u = unitary_to_e1(tp);  // boundary point of the ball: normal = tp
      out.map.linear = u * t;
      out.map.offset = VectorC::Zero(spec.dim);
      out.domain = domain.transformed(out.map);
      out.exact = true;
      break;
    }
    default: {
      RigidMap rigid = normalize_boundary(domain, p);
      out.map = rigid.affine();
      out.domain = domain.transformed(out.map);
      out.exact = false;
      // residual second-order defect of the image boundary at e_1
      double worst = 0.0;
      auto pts = out.domain.boundary_sample(4096, 7u);
      VectorC e1 = VectorC::Zero(spec.dim);
      e1(0) = 1.0;
      for (const auto& q : pts) {
        const double d = (q - e1).norm();
        if (d < 1e-3 || d > 5e-2) continue;
        worst = std::max(worst, std::abs(q.squaredNorm() - 1.0) / (d * d));
      }
      out.second_order_defect = worst;
      break;
    }
  }
  return out;
}

SampledCurve normal_ray_curve(const Domain& domain, const PointC& z, double T,
                              int samples) {
  if (T < 0) throw ConfigError("normal_ray_curve: negative parameter");
  BoundaryFrame frame = boundary_frame(domain, z);
  if (!(frame.delta > 0)) throw GeometryError("normal_ray_curve: boundary point");
  const VectorC inner_normal = -frame.outer_normal;
  SampledCurve curve;
  if (T == 0.0) {
    curve.times = {0.0};
    curve.points = {z};
    return curve;
  }
  // admissibility scan before sampling
  const int probe = std::max(samples, 64);
  for (int i = 1; i <= probe; ++i) {
    const double t = T * i / probe;
    if (!domain.contains(z + t * inner_normal)) {
      double lo = T * (i - 1) / probe, hi = t;
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        (domain.contains(z + mid * inner_normal) ? lo : hi) = mid;
      }
      throw RegionError("normal ray exits the domain; maximal admissible T = " +
                        std::to_string(lo));
    }
  }
  curve.times.resize(samples);
  curve.points.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double t = T * i / (samples - 1);
    curve.times[i] = t;
    curve.points.push_back(z + t * inner_normal);
  }
  return curve;
}

SampledCurve normal_ray_pair_curve(const Domain& domain, const PointC& z,
                                   const PointC& w, double fraction) {
  BoundaryFrame fz = boundary_frame(domain, z);
  BoundaryFrame fw = boundary_frame(domain, w);
  const double alpha =
      normal_components(fz, z - w).complex_normal_mag /
      std::max((z - w).norm(), 1e-300);
  const double t_cap = std::max(alpha, 0.05) * (z - w).norm() * fraction;
  SampledCurve down = normal_ray_curve(domain, z, t_cap, 65);
  SampledCurve up = normal_ray_curve(domain, w, t_cap, 65);
  SampledCurve out;
  out.times = down.times;
  out.points = down.points;
  for (int i = static_cast<int>(up.size()) - 1; i >= 0; --i) {
    out.times.push_back(2.0 * t_cap - up.times[i]);
    out.points.push_back(up.points[i]);
  }
  // de-duplicate the shared parameter at the junction
  out.times[down.size()] += 1e-12 * std::max(t_cap, 1e-9);
  return out;
}

double curve_kobayashi_length_upper(const Domain& domain, const SampledCurve& curve,
                                    Backend backend) {
  if (curve.size() < 2) return 0.0;
  auto metric = [&](const PointC& p, const VectorC& v) {
    if (backend == Backend::ExactBall) return royden_ball(p, v);
    return royden_upper(domain, p, v);
  };
  for (const auto& p : curve.points) {
    BoundaryFrame f = boundary_frame(domain, p);
    if (f.delta < kDeltaFloor)
      throw NumericError("curve touches the delta floor", f.delta);
  }
  // composite trapezoid on each polyline segment, Richardson-refined
  double prev = -1.0;
  int pieces = 1;
  for (int pass = 0; pass < 10; ++pass) {
    double total = 0.0;
    for (std::size_t i = 1; i < curve.size(); ++i) {
      const PointC& a = curve.points[i - 1];
      const PointC& b = curve.points[i];
      const VectorC v = b - a;
      if (v.norm() == 0.0) continue;
      double seg = 0.5 * (metric(a, v) + metric(b, v));
      for (int k = 1; k < pieces; ++k)
        seg += metric(a + (static_cast<double>(k) / pieces) * v, v);
      total += seg / pieces;
    }
    if (prev >= 0.0 && std::abs(total - prev) <= 1e-4 * std::max(total, 1e-12))
      return total;
    prev = total;
    pieces *= 2;
  }
  return prev;
}

double scaling_hausdorff_defect(const Domain& domain, double t, int boundary_samples,
                                std::uint64_t seed) {
  if (!(std::abs(t) < 1.0)) throw ConfigError("scaling parameter must satisfy |t| < 1");
  auto pts = domain.boundary_sample(boundary_samples, seed);
  double worst = 0.0;
  for (const auto& q : pts) {
    PointC image;
    try {
      image = ball_automorphism(-t, q);
    } catch (const NumericError&) {
      continue;
    }
    if (image(0).real() <= -0.5) continue;
    worst = std::max(worst, std::abs(image.norm() - 1.0));
  }
  return worst;
}

}  // namespace invdist
