#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "invdist/ball.hpp"
#include "invdist/bounds.hpp"
#include "oracles.hpp"

using namespace invdist;

namespace {

PointC pt(Complex a, Complex b) {
  PointC p(2);
  p << a, b;
  return p;
}

MatrixC random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  MatrixC m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<MatrixC> qr(m);
  return qr.householderQ();
}

}  // namespace

TEST_CASE("kobayashi_ball basics") {
  CHECK(kobayashi_ball(pt(0.3, 0.2), pt(0.3, 0.2)) == doctest::Approx(0.0));
  CHECK(kobayashi_ball(pt(0, 0), pt(0.5, 0)) ==
        doctest::Approx(std::atanh(0.5)).epsilon(1e-12));
  CHECK_THROWS_AS(kobayashi_ball(pt(1, 0), pt(0, 0)), GeometryError);

  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    PointC z = oracles::random_point_in_ball(rng, 2, 0.99);
    PointC w = oracles::random_point_in_ball(rng, 2, 0.99);
    MatrixC u = random_unitary(2, rng);
    CHECK(kobayashi_ball(u * z, u * w) ==
          doctest::Approx(kobayashi_ball(z, w)).epsilon(1e-11));
    CHECK(kobayashi_ball(z, w) == doctest::Approx(kobayashi_ball(w, z)).epsilon(1e-11));
  }
}

TEST_CASE("kobayashi_ball agrees with independent path optimization") {
  auto metric = [](const PointC& z, const VectorC& v) { return royden_ball(z, v); };
  const double direct = kobayashi_ball(pt(0, 0), pt(0.5, 0));
  const double optimized =
      oracles::path_optimization_distance(metric, pt(0, 0), pt(0.5, 0), 12, 4000);
  CHECK(optimized == doctest::Approx(direct).epsilon(1e-3));

  const double direct2 = kobayashi_ball(pt(0.3, 0.2), pt(-0.1, 0.4));
  const double optimized2 = oracles::path_optimization_distance(
      metric, pt(0.3, 0.2), pt(-0.1, 0.4), 12, 4000);
  CHECK(optimized2 == doctest::Approx(direct2).epsilon(1e-3));
}

TEST_CASE("kobayashi_ball triangle inequality") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 1000; ++i) {
    PointC a = oracles::random_point_in_ball(rng, 2, 0.999);
    PointC b = oracles::random_point_in_ball(rng, 2, 0.999);
    PointC c = oracles::random_point_in_ball(rng, 2, 0.999);
    CHECK(kobayashi_ball(a, c) <=
          kobayashi_ball(a, b) + kobayashi_ball(b, c) + 1e-12);
  }
}

TEST_CASE("kobayashi_ball is stable near the boundary") {
  // points at delta = 1e-12 still give finite monotone values
  PointC z = pt(1.0 - 1e-12, 0), w = pt(1.0 - 1e-10, 0);
  const double k = kobayashi_ball(z, w);
  CHECK(std::isfinite(k));
  CHECK(k > 0);
  // radial distance: arctanh differences, computed stably
  const double expected = std::atanh(1.0 - 1e-12) - std::atanh(1.0 - 1e-10);
  CHECK(k == doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("royden_ball closed forms and difference-quotient oracle") {
  CHECK(royden_ball(pt(0, 0), pt(0.3, 0.4)) == doctest::Approx(0.5));
  const double r = 0.7;
  CHECK(royden_ball(pt(r, 0), pt(1, 0)) == doctest::Approx(1.0 / (1 - r * r)));
  CHECK(royden_ball(pt(r, 0), pt(0, 1)) ==
        doctest::Approx(1.0 / std::sqrt(1 - r * r)));

  // difference quotient of the distance along the direction
  for (VectorC v : {pt(1, 0), pt(0, 1), pt(0.6, Complex(0, 0.8))}) {
    const PointC z = pt(r, 0);
    const double h1 = 1e-6, h2 = 5e-7;
    const double q1 = kobayashi_ball(z, z + h1 * v) / h1;
    const double q2 = kobayashi_ball(z, z + h2 * v) / h2;
    const double extrapolated = 2 * q2 - q1;
    CHECK(royden_ball(z, v) == doctest::Approx(extrapolated).epsilon(1e-5));
  }

  // homogeneity in v including complex scalars
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    PointC z = oracles::random_point_in_ball(rng, 2, 0.99);
    VectorC v = oracles::random_vector(rng, 2);
    Complex lam(std::uniform_real_distribution<>(-2, 2)(rng),
                std::uniform_real_distribution<>(-2, 2)(rng));
    CHECK(royden_ball(z, lam * v) ==
          doctest::Approx(std::abs(lam) * royden_ball(z, v)).epsilon(1e-11));
  }
}

TEST_CASE("bergman_ball against the monomial series and log-kernel differences") {
  for (int dim : {1, 2, 3}) {
    PointC zero = PointC::Zero(dim);
    VectorC v = VectorC::Zero(dim);
    v(0) = 1.0;
    auto bv = bergman_ball(zero, v);
    CHECK(bv.kernel == doctest::Approx(oracles::bergman_kernel_series(dim, 0.0))
                           .epsilon(1e-12));
    CHECK(bv.metric == doctest::Approx(std::sqrt(dim + 1.0)).epsilon(1e-12));

    // kernel off center vs the series
    PointC z = PointC::Zero(dim);
    z(0) = 0.55;
    auto bz = bergman_ball(z, v);
    CHECK(bz.kernel ==
          doctest::Approx(oracles::bergman_kernel_series(dim, 0.55)).epsilon(1e-10));
  }

  // metric(0; v) via second differences of log K along v
  {
    const int dim = 2;
    VectorC v = pt(0.8, Complex(0, 0.6));
    const double h = 1e-4;
    auto k_at = [&](double t) {
      PointC z = PointC::Zero(dim);
      z += t * v;
      VectorC dummy = VectorC::Zero(dim);
      dummy(0) = 1;
      return std::log(bergman_ball(z, dummy).kernel);
    };
    const double second = (k_at(h) - 2 * k_at(0) + k_at(-h)) / (h * h);
    const double beta0 = bergman_ball(PointC::Zero(dim), v).metric;
    CHECK(beta0 * beta0 == doctest::Approx(second / 2.0).epsilon(1e-6));
  }

  // unitary invariance of the metric
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    PointC z = oracles::random_point_in_ball(rng, 2, 0.9);
    VectorC v = oracles::random_vector(rng, 2);
    MatrixC u = random_unitary(2, rng);
    CHECK(bergman_ball(u * z, u * v).metric ==
          doctest::Approx(bergman_ball(z, v).metric).epsilon(1e-11));
  }
}

TEST_CASE("bergman distance along geodesics") {
  // the ball Bergman metric is proportional to the Royden metric, so the
  // integrated distance must match sqrt(N+1) times the Kobayashi distance
  std::mt19937_64 rng(6);
  for (int i = 0; i < 10; ++i) {
    PointC z = oracles::random_point_in_ball(rng, 2, 0.95);
    PointC w = oracles::random_point_in_ball(rng, 2, 0.95);
    const double b = bergman_distance_ball(z, w, 1e-6);
    CHECK(b == doctest::Approx(std::sqrt(3.0) * kobayashi_ball(z, w)).epsilon(1e-5));
  }
}

TEST_CASE("complex_geodesic_ball slices") {
  auto disc = complex_geodesic_ball(pt(0, 0), pt(0.5, 0));
  CHECK(disc.center.norm() <= 1e-14);
  CHECK(std::abs(std::abs(disc.a) - 1.0) <= 1e-14);
  CHECK((disc.at(Complex(0.3, 0)) - pt(0.3, 0)).norm() <= 1e-12);

  // slice through (0.3, 0), (0, 0.3) lies in the line z1 + z2 = 0.3
  auto tilted = complex_geodesic_ball(pt(0.3, 0), pt(0, 0.3));
  for (double th : {0.0, 1.0, 2.5, 4.0}) {
    PointC q = tilted.at(0.9 * Complex(std::cos(th), std::sin(th)));
    CHECK(std::abs(q(0) + q(1) - Complex(0.3, 0)) <= 1e-10);
  }

  // pullback parameters reproduce the ball distance through the disc metric
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    PointC z = oracles::random_point_in_ball(rng, 2, 0.98);
    PointC w = oracles::random_point_in_ball(rng, 2, 0.98);
    if ((z - w).norm() < 1e-6) continue;
    auto d = complex_geodesic_ball(z, w);
    const Complex zz = disc_pullback(d, z), zw = disc_pullback(d, w);
    CHECK((d.at(zz) - z).norm() <= 1e-10);
    CHECK((d.at(zw) - w).norm() <= 1e-10);
    CHECK(hyperbolic_disc_distance(zz, zw) ==
          doctest::Approx(kobayashi_ball(z, w)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(complex_geodesic_ball(pt(0.2, 0), pt(0.2, 0)), GeometryError);

  // unitary transport
  {
    std::mt19937_64 rng2(8);
    MatrixC u = random_unitary(2, rng2);
    PointC z = pt(0.3, 0.1), w = pt(-0.2, 0.4);
    auto d1 = complex_geodesic_ball(z, w);
    auto d2 = complex_geodesic_ball(u * z, u * w);
    CHECK((d2.center - u * d1.center).norm() <= 1e-12);
    // directions agree modulo a unit phase
    Complex phase = inner(d2.direction, u * d1.direction);
    CHECK(std::abs(std::abs(phase) - 1.0) <= 1e-12);
  }
}

TEST_CASE("real_geodesic_ball endpoints, straightness, length, bisection") {
  // collinear with the origin: straight Euclidean segment
  auto seg = real_geodesic_ball(pt(0.2, 0), pt(0.7, 0), 101);
  for (std::size_t i = 0; i < seg.size(); ++i)
    CHECK(std::abs(seg.points[i](1)) <= 1e-14);
  CHECK((seg.points.front() - pt(0.2, 0)).norm() <= 1e-12);
  CHECK((seg.points.back() - pt(0.7, 0)).norm() <= 1e-12);

  std::mt19937_64 rng(9);
  for (int i = 0; i < 5; ++i) {
    PointC z = oracles::random_point_in_ball(rng, 2, 0.9);
    PointC w = oracles::random_point_in_ball(rng, 2, 0.9);
    if ((z - w).norm() < 1e-3) continue;
    auto curve = real_geodesic_ball(z, w, 10001);
    CHECK((curve.points.front() - z).norm() <= 1e-10);
    CHECK((curve.points.back() - w).norm() <= 1e-10);
    // integrated Royden length equals the distance
    double len = 0.0;
    for (std::size_t s = 1; s < curve.size(); ++s) {
      const VectorC dv = curve.points[s] - curve.points[s - 1];
      len += royden_ball(0.5 * (curve.points[s] + curve.points[s - 1]), dv);
    }
    CHECK(len == doctest::Approx(kobayashi_ball(z, w)).epsilon(1e-6));
    // midpoint bisection
    const PointC mid = curve.points[curve.size() / 2];
    CHECK(kobayashi_ball(z, mid) == doctest::Approx(kobayashi_ball(mid, w)).epsilon(1e-8));
  }
}

TEST_CASE("ma-estimate sandwich on the ball") {
  // royden_ball / (|v_z|/delta + |v|/sqrt(delta)) bounded above and below
  // over stratified samples, stable under doubling
  DomainSpec spec;
  spec.family = DomainFamily::UnitBall;
  spec.dim = 2;
  Domain dom(spec);

  auto scan = [&](int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double lo = 1e300, hi = 0.0;
    for (int i = 0; i < count; ++i) {
      const double delta = 1e-4 * std::exp(std::log(0.5 / 1e-4) * unif(rng));
      PointC dir = oracles::random_point_in_ball(rng, 2, 1.0);
      dir /= dir.norm();
      PointC z = (1.0 - delta) * dir;
      VectorC v = oracles::random_vector(rng, 2);
      const double kappa = royden_ball(z, v);
      const double ma = ma_estimator(boundary_frame(dom, z), v);
      const double ratio = kappa / ma;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    return std::pair{lo, hi};
  };
  auto [lo1, hi1] = scan(10000, 11u);
  auto [lo2, hi2] = scan(20000, 23u);
  CHECK(lo1 > 0);
  CHECK(hi1 < 1e3);
  CHECK(std::abs(lo2 - lo1) <= 0.10 * lo1);
  CHECK(std::abs(hi2 - hi1) <= 0.10 * hi1);
}

TEST_CASE("max-delta parametrized slices are complex tangent at the top") {
  // |<phi'(0), eta at pi(phi(0))>| vanishes for slices centered at the
  // max-delta point
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    PointC z = oracles::random_point_in_ball(rng, 2, 0.95);
    PointC w = oracles::random_point_in_ball(rng, 2, 0.95);
    if ((z - w).norm() < 1e-6 || z.norm() < 1e-3) continue;
    auto disc = complex_geodesic_ball(z, w);
    if (disc.center.norm() < 1e-6) continue;  // center slice: frame ambiguous
    const VectorC eta = disc.center / disc.center.norm();
    CHECK(std::abs(inner(disc.derivative(), eta)) /
              disc.derivative().norm() <=
          1e-8);
  }
}
