#include "invdist/ball.hpp"

#include <cmath>
#include <numbers>

namespace invdist {

namespace {

void require_interior(const PointC& z, const char* who) {
  if (z.norm() >= 1.0)
    throw GeometryError(std::string(who) + ": point not inside the unit ball");
}

double tgamma_int(int n) {  // n! for small n
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

std::string DiscMap::to_json() const {
  std::string out = "{\"center\":[";
  char buf[96];
  auto put = [&](Complex c, bool comma) {
    std::snprintf(buf, sizeof(buf), "[%.17g,%.17g]%s", c.real(), c.imag(),
                  comma ? "," : "");
    out += buf;
  };
  for (Eigen::Index j = 0; j < center.size(); ++j) put(center(j), j + 1 < center.size());
  out += "],\"direction\":[";
  for (Eigen::Index j = 0; j < direction.size(); ++j)
    put(direction(j), j + 1 < direction.size());
  out += "],\"a\":";
  put(a, false);
  out += ",\"b\":";
  put(b, false);
  out += "}";
  return out;
}

double kobayashi_ball(const PointC& z, const PointC& w) {
  require_interior(z, "kobayashi_ball");
  require_interior(w, "kobayashi_ball");
  const VectorC d = z - w;
  const double one_mz = 1.0 - z.squaredNorm();
  const double one_mw = 1.0 - w.squaredNorm();
  // |1-<z,w>|^2 - (1-|z|^2)(1-|w|^2) = |z-w|^2 (1-|z|^2) + |<z-w,z>|^2
  const double disc = d.squaredNorm() * one_mz + std::norm(inner(d, z));
  const double num = std::abs(1.0 - inner(z, w)) + std::sqrt(std::max(0.0, disc));
  return std::log(num / std::sqrt(one_mz * one_mw));
}

double kobayashi_ball(const PointC& z, const PointC& w, const PointC& center,
                      double radius) {
  return kobayashi_ball((z - center) / radius, (w - center) / radius);
}

double royden_ball(const PointC& z, const VectorC& v) {
  require_interior(z, "royden_ball");
  const double one_mz = 1.0 - z.squaredNorm();
  return std::sqrt(v.squaredNorm() / one_mz + std::norm(inner(v, z)) / sqr(one_mz));
}

double royden_ball(const PointC& z, const VectorC& v, const PointC& center,
                   double radius) {
  return royden_ball((z - center) / radius, v / radius);
}

BergmanValue bergman_ball(const PointC& z, const VectorC& v) {
  require_interior(z, "bergman_ball");
  const int n = static_cast<int>(z.size());
  const double one_mz = 1.0 - z.squaredNorm();
  BergmanValue out;
  out.kernel = tgamma_int(n) / std::pow(std::numbers::pi, n) /
               std::pow(one_mz, n + 1);
  out.metric = std::sqrt(n + 1.0) * royden_ball(z, v);
  return out;
}

double bergman_distance_ball(const PointC& z, const PointC& w, double tol) {
  if ((z - w).norm() == 0.0) return 0.0;
  // integrate the Bergman metric along the Kobayashi geodesic; the two
  // metrics are proportional on the ball so the geodesic is shared
  int samples = 65;
  double prev = 0.0;
  for (int pass = 0; pass < 12; ++pass) {
    SampledCurve curve = real_geodesic_ball(z, w, samples);
    double len = 0.0;
    for (std::size_t i = 1; i < curve.size(); ++i) {
      const PointC mid = 0.5 * (curve.points[i] + curve.points[i - 1]);
      const VectorC dv = curve.points[i] - curve.points[i - 1];
      len += bergman_ball(mid, dv).metric;
    }
    if (pass > 0 && std::abs(len - prev) <= tol * std::max(1.0, std::abs(len)))
      return len;
    prev = len;
    samples = 2 * (samples - 1) + 1;
  }
  return prev;
}

DiscMap complex_geodesic_ball(const PointC& z, const PointC& w) {
  require_interior(z, "complex_geodesic_ball");
  require_interior(w, "complex_geodesic_ball");
  const VectorC d = w - z;
  const double nd = d.norm();
  if (nd < 1e-15) throw GeometryError("complex_geodesic_ball: z == w");
  DiscMap disc;
  disc.direction = d / nd;
  // Euclidean center of the slice: the point of the line closest to 0
  disc.center = z - inner(z, disc.direction) * disc.direction;
  const double c2 = disc.center.squaredNorm();
  disc.a = std::sqrt(std::max(0.0, 1.0 - c2));
  disc.b = 0.0;
  return disc;
}

Complex disc_pullback(const DiscMap& disc, const PointC& z) {
  Complex s = inner(z - disc.center, disc.direction);
  return (s - disc.b) / disc.a;
}

double hyperbolic_disc_distance(Complex a, Complex b) {
  Complex t = (a - b) / (1.0 - std::conj(b) * a);
  return std::atanh(std::min(std::abs(t), 1.0 - 1e-16));
}

SampledCurve real_geodesic_ball(const PointC& z, const PointC& w, int samples) {
  if (samples < 2) throw ConfigError("real_geodesic_ball needs >= 2 samples");
  DiscMap disc = complex_geodesic_ball(z, w);
  const Complex zz = disc_pullback(disc, z);
  const Complex zw = disc_pullback(disc, w);
  // move zz to the disc origin, then the geodesic is a radial segment
  const Complex target = (zw - zz) / (1.0 - std::conj(zz) * zw);
  const double r = std::abs(target);
  const Complex phase = target / std::max(r, 1e-300);
  const double total = std::atanh(std::min(r, 1.0 - 1e-16));
  SampledCurve curve;
  curve.times.resize(samples);
  curve.points.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double s = total * i / (samples - 1);  // unit speed in k
    const Complex u = phase * std::tanh(s);
    const Complex zeta = (u + zz) / (1.0 + std::conj(zz) * u);
    curve.times[i] = s;
    curve.points.push_back(disc.at(zeta));
  }
  // endpoints are exact up to round-off; pin them
  curve.points.front() = z;
  curve.points.back() = w;
  return curve;
}

}  // namespace invdist
