#include "invdist/boundary.hpp"

#include <cmath>

namespace invdist {

namespace {

Eigen::VectorXd realify(const VectorC& z) {
  Eigen::VectorXd r(2 * z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    r(2 * j) = z(j).real();
    r(2 * j + 1) = z(j).imag();
  }
  return r;
}

PointC complexify(const Eigen::VectorXd& r) {
  PointC z(r.size() / 2);
  for (Eigen::Index j = 0; j < z.size(); ++j)
    z(j) = Complex(r(2 * j), r(2 * j + 1));
  return z;
}

// Orthonormal complex basis of the complex tangent {v : <v, g> = 0}.
MatrixC complex_tangent_basis(const VectorC& g) {
  const Eigen::Index n = g.size();
  VectorC gn = g / g.norm();
  MatrixC basis(n, n - 1);
  Eigen::Index col = 0;
  for (Eigen::Index j = 0; j < n && col < n - 1; ++j) {
    VectorC e = VectorC::Zero(n);
    e(j) = 1.0;
    VectorC v = e - inner(e, gn) * gn;
    for (Eigen::Index k = 0; k < col; ++k)
      v -= inner(v, basis.col(k)) * basis.col(k);
    double nv = v.norm();
    if (nv < 1e-8) continue;
    basis.col(col++) = v / nv;
  }
  if (col != n - 1) throw GeometryError("failed to build complex tangent basis");
  return basis;
}

struct ProjectionResult {
  PointC p;
  double mu = 0.0;
  double residual = 0.0;
  bool converged = false;
};

double residual_norm(const Domain& dom, const PointC& zp, const PointC& z, double mu) {
  DefiningValue dv = dom.defining_value(zp);
  Eigen::VectorXd f(2 * zp.size() + 1);
  f.head(2 * zp.size()) = realify(zp - z) - mu * realify(dv.gradient);
  f(2 * zp.size()) = dv.value;
  return f.norm();
}

// Damped Newton on the stationarity system
//   p - z - mu * grad rho(p) = 0,  rho(p) = 0.
ProjectionResult newton_project(const Domain& dom, const PointC& z,
                                const PointC& seed, double tol, int max_iter) {
  const Eigen::Index n2 = 2 * z.size();
  ProjectionResult res;
  PointC p = seed;
  DefiningValue dv = dom.defining_value(p);
  Eigen::VectorXd g = realify(dv.gradient);
  double sign = dom.rho(z) <= 0 ? 1.0 : -1.0;  // p - z along +-outer normal
  double mu = sign * (p - z).norm() / std::max(g.norm(), 1e-300);

  double fn = residual_norm(dom, p, z, mu);
  for (int it = 0; it < 60 && fn > tol; ++it) {
    dv = dom.defining_value(p);
    g = realify(dv.gradient);
    Eigen::MatrixXd h = dom.real_hessian(p);
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n2 + 1, n2 + 1);
    jac.topLeftCorner(n2, n2) =
        Eigen::MatrixXd::Identity(n2, n2) - mu * h;
    jac.block(0, n2, n2, 1) = -g;
    jac.block(n2, 0, 1, n2) = g.transpose();
    Eigen::VectorXd f(n2 + 1);
    f.head(n2) = realify(p - z) - mu * g;
    f(n2) = dv.value;
    Eigen::VectorXd step = jac.fullPivLu().solve(-f);
    double lambda = 1.0;
    for (int halve = 0; halve < 40; ++halve) {
      PointC p_try = p + complexify(lambda * step.head(n2));
      double mu_try = mu + lambda * step(n2);
      if (dom.in_working_region(p_try)) {
        double fn_try = residual_norm(dom, p_try, z, mu_try);
        if (fn_try < (1.0 - 1e-4 * lambda) * fn) {
          p = p_try;
          mu = mu_try;
          fn = fn_try;
          break;
        }
      }
      lambda *= 0.5;
      if (halve == 39) { it = 60; }  // stalled
    }
  }
  res.p = p;
  res.mu = mu;
  res.residual = fn;
  res.converged = fn <= tol;
  return res;
}

// Move a point onto {rho = 0} along the gradient direction by 1-D Newton.
PointC pull_to_boundary(const Domain& dom, PointC p) {
  for (int it = 0; it < 80; ++it) {
    DefiningValue dv = dom.defining_value(p);
    double gn2 = realify(dv.gradient).squaredNorm();
    if (gn2 < 1e-300) throw GeometryError("degenerate gradient");
    if (std::abs(dv.value) < 1e-14) break;
    p -= (dv.value / gn2) * dv.gradient;
  }
  return p;
}

ProjectionResult gradient_project(const Domain& dom, const PointC& z,
                                  PointC seed, double tol) {
  PointC p = pull_to_boundary(dom, seed);
  double step = 0.5;
  double best = (p - z).norm();
  for (int it = 0; it < 2000; ++it) {
    DefiningValue dv = dom.defining_value(p);
    VectorC eta = dv.gradient / dv.gradient.norm();
    VectorC d = p - z;
    VectorC tang = d - inner(d, eta) * eta;  // descent direction for |p-z|^2
    if (tang.norm() < 1e-15) break;
    PointC p_try = pull_to_boundary(dom, p - step * tang);
    double val = (p_try - z).norm();
    if (val < best) {
      p = p_try;
      best = val;
      step = std::min(1.0, step * 1.3);
    } else {
      step *= 0.5;
      if (step < 1e-14) break;
    }
  }
  ProjectionResult res;
  DefiningValue dv = dom.defining_value(p);
  double sign = dom.rho(z) <= 0 ? 1.0 : -1.0;
  res.p = p;
  res.mu = sign * (p - z).norm() / realify(dv.gradient).norm();
  res.residual = residual_norm(dom, p, z, res.mu);
  res.converged = res.residual <= tol * 1e3;  // fallback is a coarse solver
  return res;
}

PointC radial_seed(const Domain& dom, const PointC& z) {
  const int n = dom.dim();
  const DomainSpec& spec = dom.spec();
  if (spec.family == DomainFamily::LocalModelS9) {
    // graph seed: x1 = -2 y2^2 with the remaining coordinates kept
    PointC p = z;
    p(0) = Complex(-2.0 * sqr(z(1).imag()), z(0).imag());
    return p;
  }
  PointC dir = z;
  if (dir.norm() < 1e-9) {
    // deterministic seed at a degenerate center: closest semiaxis
    dir = PointC::Zero(n);
    int jbest = 0;
    if (spec.family == DomainFamily::Ellipsoid) {
      for (int j = 1; j < n; ++j)
        if (spec.coeffs[j] > spec.coeffs[jbest]) jbest = j;
    }
    dir(jbest) = 1.0;
  }
  dir /= dir.norm();
  double lo = 0.0, hi = dom.circumradius() * 1.0000001;
  if (dom.rho(hi * dir) <= 0) hi *= 2.0;
  for (int it = 0; it < 100; ++it) {
    double mid = 0.5 * (lo + hi);
    (dom.rho(mid * dir) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi) * dir;
}

// Uniqueness heuristic: the projection is certified unique when the
// constrained second-order matrix I - mu * Hess(rho) stays positive
// definite on the real tangent space of the boundary at p.
bool projection_unique(const Domain& dom, const PointC& p, double mu) {
  Eigen::MatrixXd h = dom.real_hessian(p);
  Eigen::VectorXd g = realify(dom.defining_value(p).gradient);
  g /= g.norm();
  const Eigen::Index n2 = g.size();
  Eigen::MatrixXd m =
      Eigen::MatrixXd::Identity(n2, n2) - mu * h;
  // project out the normal direction
  Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(n2, n2) - g * g.transpose();
  Eigen::MatrixXd mt = proj * m * proj + g * g.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (mt + mt.transpose()));
  return es.eigenvalues().minCoeff() > 1e-8;
}

}  // namespace

BoundaryFrame boundary_frame(const Domain& domain, const PointC& z) {
  if (!domain.in_working_region(z))
    throw RegionError("point outside working region");
  BoundaryFrame frame;

  if (domain.spec().family == DomainFamily::UnitBall && !domain.has_premap()) {
    const double nz = z.norm();
    frame.delta = std::abs(1.0 - nz);  // exterior points carry the distance too
    if (nz < 1e-300) {
      frame.projection = PointC::Zero(domain.dim());
      frame.projection(0) = 1.0;
      frame.unique_projection = false;
    } else {
      frame.projection = z / nz;
      frame.unique_projection = true;
    }
    frame.outer_normal = frame.projection;
    frame.levi_min = levi_minimum(domain, frame.projection);
    return frame;
  }

  const double tol = 1e-10;
  ProjectionResult res = newton_project(domain, z, radial_seed(domain, z), tol, 60);
  if (!res.converged) {
    res = gradient_project(domain, z, radial_seed(domain, z), tol);
    if (!res.converged)
      throw NumericError("projection solver did not converge", res.residual);
  }
  DefiningValue dv = domain.defining_value(res.p);
  if (dv.gradient.norm() < 1e-12)
    throw GeometryError("degenerate gradient at projection");
  frame.delta = (res.p - z).norm();
  frame.projection = res.p;
  frame.outer_normal = dv.gradient / dv.gradient.norm();
  frame.unique_projection = projection_unique(domain, res.p, res.mu);
  frame.levi_min = levi_minimum(domain, res.p);
  return frame;
}

double signed_distance(const Domain& domain, const PointC& z) {
  BoundaryFrame f = boundary_frame(domain, z);
  return domain.rho(z) <= 0 ? -f.delta : f.delta;
}

NormalComponents normal_components(const BoundaryFrame& frame, const VectorC& v) {
  NormalComponents out;
  Complex pairing = inner(v, frame.outer_normal);
  out.complex_normal_mag = std::abs(pairing);
  out.real_normal_mag = std::abs(pairing.real());
  out.tangential = v - pairing * frame.outer_normal;
  return out;
}

double levi_minimum(const Domain& domain, const PointC& p) {
  DefiningValue dv = domain.defining_value(p);
  if (std::abs(dv.value) > 1e-6)
    throw GeometryError("levi_minimum requires a boundary point");
  const double gn = dv.gradient.norm();
  if (gn < 1e-12) throw GeometryError("degenerate gradient");
  if (domain.dim() == 1) return 0.0;
  MatrixC basis = complex_tangent_basis(dv.gradient);
  MatrixC restricted = basis.adjoint() * dv.complex_hessian * basis;
  Eigen::SelfAdjointEigenSolver<MatrixC> es(restricted);
  return es.eigenvalues().minCoeff() / gn;
}

SlcLambda slc_lambda_detail(const Domain& domain, const PointC& p) {
  DefiningValue dv = domain.defining_value(p);
  if (std::abs(dv.value) > 1e-8)
    throw GeometryError("slc_lambda requires a boundary point");
  const Eigen::Index n = domain.dim();
  if (n == 1) return {0.0, 0.0};
  MatrixC cbasis = complex_tangent_basis(dv.gradient);
  // real orthonormal basis {b, i b} of the complex tangent plane
  std::vector<VectorC> rbasis;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    rbasis.push_back(cbasis.col(k));
    rbasis.push_back(Complex(0, 1) * cbasis.col(k));
  }
  const Eigen::Index m = static_cast<Eigen::Index>(rbasis.size());

  auto quad_form = [&](const VectorC& u, double h) {
    // second difference of the signed distance along u
    double dp = signed_distance(domain, p + h * u);
    double dm = signed_distance(domain, p - h * u);
    return (dp + dm) / (h * h);
  };
  auto hessian_at = [&](double h) {
    Eigen::MatrixXd q(m, m);
    std::vector<double> diag(m);
    for (Eigen::Index a = 0; a < m; ++a) {
      diag[a] = quad_form(rbasis[a], h);
      q(a, a) = diag[a];
    }
    for (Eigen::Index a = 0; a < m; ++a)
      for (Eigen::Index b = a + 1; b < m; ++b) {
        VectorC u = (rbasis[a] + rbasis[b]) / std::sqrt(2.0);
        double qab = quad_form(u, h) - 0.5 * (diag[a] + diag[b]);
        q(a, b) = qab;
        q(b, a) = qab;
      }
    return q;
  };

  const double scale = std::max(1.0, p.norm());
  double h = 1e-3 * scale;
  if (domain.spec().family == DomainFamily::LocalModelS9)
    h = std::min(h, 0.02 * domain.spec().working_radius);
  Eigen::MatrixXd q1 = hessian_at(h);
  Eigen::MatrixXd q2 = hessian_at(h / 2);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e1(q1), e2(q2);
  // Richardson: second differences converge at O(h^2)
  double lam1 = e1.eigenvalues().minCoeff();
  double lam2 = e2.eigenvalues().minCoeff();
  double lam = (4.0 * lam2 - lam1) / 3.0;
  if (std::abs(lam2 - lam1) > 0.05 * std::max(1.0, std::abs(lam2)))
    throw NumericError("signed-distance Hessian stencil did not converge",
                       std::abs(lam2 - lam1));
  SlcLambda out;
  out.full_hessian = lam;
  out.half_hessian = 0.5 * lam;
  return out;
}

double slc_lambda(const Domain& domain, const PointC& p) {
  if (domain.spec().family == DomainFamily::UnitBall && !domain.has_premap()) {
    return 0.5;  // signed distance |z| - 1: Taylor form is 1/2 at every point
  }
  return slc_lambda_detail(domain, p).half_hessian;
}

}  // namespace invdist
