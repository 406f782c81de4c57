#include "invdist/domain.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace invdist {

namespace {

// Map a complex N-vector to the stacked real 2N-vector (x1,y1,...,xN,yN).
Eigen::VectorXd realify(const VectorC& z) {
  Eigen::VectorXd r(2 * z.size());
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    r(2 * j) = z(j).real();
    r(2 * j + 1) = z(j).imag();
  }
  return r;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  auto e = s.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string family_name(DomainFamily f) {
  switch (f) {
    case DomainFamily::UnitBall: return "unit_ball";
    case DomainFamily::Ellipsoid: return "ellipsoid";
    case DomainFamily::LocalModelS9: return "local_model_s9";
    case DomainFamily::PerturbedBall: return "perturbed_ball";
  }
  return "unknown";
}

AffineMap AffineMap::inverse() const {
  AffineMap inv;
  inv.linear = linear.fullPivLu().inverse();
  inv.offset = -(inv.linear * offset);
  return inv;
}

bool AffineMap::is_unitary(double tol) const {
  MatrixC g = linear.adjoint() * linear;
  return (g - MatrixC::Identity(linear.rows(), linear.cols())).norm() < tol;
}

Domain::Domain(DomainSpec spec) : spec_(std::move(spec)) {
  if (spec_.dim < 1) throw ConfigError("domain dimension must be positive");
  switch (spec_.family) {
    case DomainFamily::Ellipsoid:
      if (static_cast<int>(spec_.coeffs.size()) != spec_.dim)
        throw ConfigError("ellipsoid needs one coefficient per dimension");
      for (double a : spec_.coeffs)
        if (!(a > 0)) throw ConfigError("ellipsoid coefficients must be positive");
      break;
    case DomainFamily::LocalModelS9:
      if (spec_.dim != 2) throw ConfigError("local_model_s9 is a domain of C^2");
      if (!(spec_.working_radius > 0 && spec_.working_radius <= 0.25))
        throw ConfigError("local_model_s9 working radius must lie in (0, 0.25]");
      break;
    case DomainFamily::PerturbedBall: {
      if (spec_.bump_center.size() == 0) {
        spec_.bump_center = PointC::Zero(spec_.dim);
        spec_.bump_center(0) = 1.0;
      }
      if (spec_.bump_center.size() != spec_.dim)
        throw ConfigError("bump center dimension mismatch");
      double n = spec_.bump_center.norm();
      if (!(n > 0)) throw ConfigError("bump center must be nonzero");
      spec_.bump_center /= n;  // bump sits on the unit sphere
      if (!(spec_.bump_width > 0)) throw ConfigError("bump width must be positive");
      if (std::abs(spec_.amplitude) > 0.2)
        throw ConfigError("perturbation amplitude too large for a certified model");
      break;
    }
    default:
      break;
  }
  if (!(spec_.holder_alpha > 0 && spec_.holder_alpha <= 1))
    throw ConfigError("holder exponent must lie in (0, 1]");
}

PointC Domain::to_base(const PointC& z) const {
  if (!premap_inv_) return z;
  return premap_inv_->apply(z);
}

bool Domain::in_working_region(const PointC& z) const {
  if (spec_.family != DomainFamily::LocalModelS9) return true;
  return to_base(z).norm() <= spec_.working_radius + 1e-9;
}

DefiningValue Domain::defining_value(const PointC& z) const {
  if (z.size() != spec_.dim) throw ConfigError("point dimension mismatch");
  if (!in_working_region(z))
    throw RegionError("point outside the working region of local_model_s9");
  const PointC zb = to_base(z);
  const int n = spec_.dim;
  DefiningValue out;
  out.gradient = VectorC::Zero(n);
  out.complex_hessian = MatrixC::Zero(n, n);
  switch (spec_.family) {
    case DomainFamily::UnitBall: {
      out.value = zb.squaredNorm() - 1.0;
      out.gradient = 2.0 * zb;
      out.complex_hessian = MatrixC::Identity(n, n);
      break;
    }
    case DomainFamily::Ellipsoid: {
      double v = -1.0;
      for (int j = 0; j < n; ++j) {
        v += spec_.coeffs[j] * std::norm(zb(j));
        out.gradient(j) = 2.0 * spec_.coeffs[j] * zb(j);
        out.complex_hessian(j, j) = spec_.coeffs[j];
      }
      out.value = v;
      break;
    }
    case DomainFamily::LocalModelS9: {
      // rho = Re(z1 - z2^2) + |z2|^2 = x1 + 2*y2^2
      out.value = zb(0).real() + 2.0 * sqr(zb(1).imag());
      out.gradient(0) = 1.0;
      out.gradient(1) = Complex(0.0, 4.0 * zb(1).imag());
      out.complex_hessian(1, 1) = 1.0;
      break;
    }
    case DomainFamily::PerturbedBall: {
      const VectorC d = zb - spec_.bump_center;
      const double w2 = sqr(spec_.bump_width);
      const double b = std::exp(-d.squaredNorm() / w2);
      const double eps = spec_.amplitude;
      out.value = zb.squaredNorm() - 1.0 + eps * b;
      out.gradient = 2.0 * zb - (2.0 * eps * b / w2) * d;
      // H_jk = delta_jk + eps*b*( conj(d_j) d_k / w^4 - delta_jk / w^2 )
      out.complex_hessian =
          (1.0 - eps * b / w2) * MatrixC::Identity(n, n) +
          (eps * b / sqr(w2)) * (d.conjugate() * d.transpose());
      break;
    }
  }
  if (premap_inv_) {
    const MatrixC& B = premap_inv_->linear;
    out.gradient = (B.adjoint() * out.gradient).eval();
    out.complex_hessian =
        (B.transpose() * out.complex_hessian * B.conjugate()).eval();
  }
  return out;
}

double Domain::rho(const PointC& z) const {
  if (z.size() != spec_.dim) throw ConfigError("point dimension mismatch");
  if (!in_working_region(z))
    throw RegionError("point outside the working region of local_model_s9");
  const PointC zb = to_base(z);
  switch (spec_.family) {
    case DomainFamily::UnitBall:
      return zb.squaredNorm() - 1.0;
    case DomainFamily::Ellipsoid: {
      double v = -1.0;
      for (int j = 0; j < spec_.dim; ++j) v += spec_.coeffs[j] * std::norm(zb(j));
      return v;
    }
    case DomainFamily::LocalModelS9:
      return zb(0).real() + 2.0 * sqr(zb(1).imag());
    case DomainFamily::PerturbedBall: {
      const double d2 = (zb - spec_.bump_center).squaredNorm();
      return zb.squaredNorm() - 1.0 +
             spec_.amplitude * std::exp(-d2 / sqr(spec_.bump_width));
    }
  }
  return 0.0;
}

Eigen::MatrixXd Domain::real_hessian(const PointC& z) const {
  const PointC zb = to_base(z);
  const int n = spec_.dim;
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  switch (spec_.family) {
    case DomainFamily::UnitBall:
      h = 2.0 * Eigen::MatrixXd::Identity(2 * n, 2 * n);
      break;
    case DomainFamily::Ellipsoid:
      for (int j = 0; j < n; ++j) {
        h(2 * j, 2 * j) = 2.0 * spec_.coeffs[j];
        h(2 * j + 1, 2 * j + 1) = 2.0 * spec_.coeffs[j];
      }
      break;
    case DomainFamily::LocalModelS9:
      h(3, 3) = 4.0;  // rho = x1 + 2 y2^2
      break;
    case DomainFamily::PerturbedBall: {
      const Eigen::VectorXd d = realify(zb - spec_.bump_center);
      const double w2 = sqr(spec_.bump_width);
      const double b = std::exp(-d.squaredNorm() / w2);
      h = 2.0 * Eigen::MatrixXd::Identity(2 * n, 2 * n) +
          spec_.amplitude * b *
              (4.0 / sqr(w2) * (d * d.transpose()) -
               2.0 / w2 * Eigen::MatrixXd::Identity(2 * n, 2 * n));
      break;
    }
  }
  if (premap_inv_) {
    const MatrixC& B = premap_inv_->linear;
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        r(2 * j, 2 * k) = B(j, k).real();
        r(2 * j, 2 * k + 1) = -B(j, k).imag();
        r(2 * j + 1, 2 * k) = B(j, k).imag();
        r(2 * j + 1, 2 * k + 1) = B(j, k).real();
      }
    h = (r.transpose() * h * r).eval();
  }
  return h;
}

bool Domain::contains(const PointC& z) const {
  if (!in_working_region(z)) return false;
  return defining_value(z).value < 0.0;
}

double Domain::circumradius() const {
  double base = 1.0;
  switch (spec_.family) {
    case DomainFamily::UnitBall: base = 1.0; break;
    case DomainFamily::Ellipsoid: {
      double amin = *std::min_element(spec_.coeffs.begin(), spec_.coeffs.end());
      base = 1.0 / std::sqrt(amin);
      break;
    }
    case DomainFamily::LocalModelS9: base = spec_.working_radius; break;
    case DomainFamily::PerturbedBall:
      base = std::sqrt(1.0 + std::max(0.0, -spec_.amplitude) + 1e-12);
      break;
  }
  if (!premap_) return base;
  Eigen::JacobiSVD<MatrixC> svd(premap_->linear);
  return svd.singularValues()(0) * base + premap_->offset.norm();
}

PointC Domain::enclosing_center() const {
  PointC c = PointC::Zero(spec_.dim);
  if (premap_) c = premap_->apply(c);
  return c;
}

double Domain::enclosing_radius() const {
  double base = 1.0;
  switch (spec_.family) {
    case DomainFamily::UnitBall: base = 1.0; break;
    case DomainFamily::Ellipsoid: {
      double amin = *std::min_element(spec_.coeffs.begin(), spec_.coeffs.end());
      base = amin >= 1.0 ? 1.0 : 1.0 / std::sqrt(amin);
      break;
    }
    case DomainFamily::LocalModelS9: base = spec_.working_radius; break;
    case DomainFamily::PerturbedBall: base = std::sqrt(1.0 + std::abs(spec_.amplitude)); break;
  }
  if (!premap_) return base;
  Eigen::JacobiSVD<MatrixC> svd(premap_->linear);
  return svd.singularValues()(0) * base;
}

std::vector<PointC> Domain::boundary_sample(int count, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<PointC> out;
  out.reserve(count);
  const int n = spec_.dim;
  const Domain base(spec_);  // untransformed copy for root finding
  while (static_cast<int>(out.size()) < count) {
    if (spec_.family == DomainFamily::LocalModelS9) {
      // boundary is the exact graph x1 = -2 y2^2 inside the working ball
      double r = 0.9 * spec_.working_radius;
      double y1 = unif(rng) * r / 2, x2 = unif(rng) * r / 2, y2 = unif(rng) * r / 2;
      PointC p(2);
      p(0) = Complex(-2.0 * sqr(y2), y1);
      p(1) = Complex(x2, y2);
      if (p.norm() > spec_.working_radius) continue;
      out.push_back(premap_ ? premap_->apply(p) : p);
      continue;
    }
    // star-shaped families: solve rho(r u) = 0 along a random direction
    PointC u(n);
    for (int j = 0; j < n; ++j) u(j) = Complex(gauss(rng), gauss(rng));
    double nu = u.norm();
    if (nu < 1e-12) continue;
    u /= nu;
    double lo = 0.0, hi = base.circumradius() * 1.0000001;
    if (base.rho(hi * u) <= 0) continue;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      (base.rho(mid * u) < 0 ? lo : hi) = mid;
    }
    PointC p = (0.5 * (lo + hi)) * u;
    out.push_back(premap_ ? premap_->apply(p) : p);
  }
  return out;
}

Domain Domain::transformed(const AffineMap& map) const {
  Domain d(spec_);
  if (premap_) {
    AffineMap chained;
    chained.linear = map.linear * premap_->linear;
    chained.offset = map.linear * premap_->offset + map.offset;
    d.premap_ = chained;
  } else {
    d.premap_ = map;
  }
  d.premap_inv_ = d.premap_->inverse();
  return d;
}

PointC parse_complex_tuple(const std::string& text) {
  std::vector<Complex> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    auto colon = item.find(':');
    try {
      if (colon == std::string::npos) {
        vals.emplace_back(std::stod(item), 0.0);
      } else {
        vals.emplace_back(std::stod(item.substr(0, colon)),
                          std::stod(item.substr(colon + 1)));
      }
    } catch (const std::exception&) {
      throw ConfigError("cannot parse complex tuple entry '" + item + "'");
    }
  }
  if (vals.empty()) throw ConfigError("empty complex tuple");
  PointC z(static_cast<Eigen::Index>(vals.size()));
  for (size_t j = 0; j < vals.size(); ++j) z(j) = vals[j];
  return z;
}

std::string format_complex_tuple(const PointC& z) {
  std::string out;
  char buf[80];
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    std::snprintf(buf, sizeof(buf), "%.17g:%.17g", z(j).real(), z(j).imag());
    if (j) out += ",";
    out += buf;
  }
  return out;
}

Domain domain_from_config_text(const std::string& text) {
  DomainSpec spec;
  bool have_family = false;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line without '=': " + line);
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    try {
      if (key == "family") {
        have_family = true;
        if (val == "unit_ball") spec.family = DomainFamily::UnitBall;
        else if (val == "ellipsoid") spec.family = DomainFamily::Ellipsoid;
        else if (val == "local_model_s9") spec.family = DomainFamily::LocalModelS9;
        else if (val == "perturbed_ball") spec.family = DomainFamily::PerturbedBall;
        else throw ConfigError("unknown family '" + val + "'");
      } else if (key == "dim") {
        spec.dim = std::stoi(val);
      } else if (key == "coeffs") {
        spec.coeffs.clear();
        std::stringstream cs(val);
        std::string c;
        while (std::getline(cs, c, ',')) spec.coeffs.push_back(std::stod(trim(c)));
      } else if (key == "amplitude") {
        spec.amplitude = std::stod(val);
      } else if (key == "bump_center") {
        spec.bump_center = parse_complex_tuple(val);
      } else if (key == "bump_width") {
        spec.bump_width = std::stod(val);
      } else if (key == "holder_alpha") {
        spec.holder_alpha = std::stod(val);
      } else if (key == "working_radius") {
        spec.working_radius = std::stod(val);
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError("cannot parse value for key '" + key + "'");
    }
  }
  if (!have_family) throw ConfigError("config is missing the 'family' key");
  if (spec.family == DomainFamily::LocalModelS9) spec.dim = 2;
  return Domain(spec);
}

Domain domain_from_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return domain_from_config_text(ss.str());
}

}  // namespace invdist
