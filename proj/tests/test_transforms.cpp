#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "invdist/transforms.hpp"
#include "oracles.hpp"

using namespace invdist;

namespace {

Domain ball(int n = 2) {
  DomainSpec spec;
  spec.family = DomainFamily::UnitBall;
  spec.dim = n;
  return Domain(spec);
}

Domain ellipsoid(std::vector<double> coeffs) {
  DomainSpec spec;
  spec.family = DomainFamily::Ellipsoid;
  spec.dim = static_cast<int>(coeffs.size());
  spec.coeffs = std::move(coeffs);
  return Domain(spec);
}

PointC pt(Complex a, Complex b) {
  PointC p(2);
  p << a, b;
  return p;
}

}  // namespace

TEST_CASE("mobius map basics and group law") {
  CHECK(mobius(0.3, 0.0) == Complex(0.3, 0));
  CHECK(std::abs(mobius(0.3, -0.3)) <= 1e-15);
  CHECK(mobius(0.5, 0.5).real() == doctest::Approx(0.8));

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unif(-0.95, 0.95);
  for (int i = 0; i < 100; ++i) {
    const double t = unif(rng), s = unif(rng);
    const Complex zeta(unif(rng) * 0.7, unif(rng) * 0.7);
    const Complex lhs = mobius(t, mobius(s, zeta));
    const Complex rhs = mobius((t + s) / (1 + t * s), zeta);
    CHECK(std::abs(lhs - rhs) <= 1e-12);
  }
}

TEST_CASE("ball_automorphism: fixed point, inverse, sphere preservation") {
  PointC zero = PointC::Zero(2);
  CHECK((ball_automorphism(0.4, zero) - pt(0.4, 0)).norm() <= 1e-15);

  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unif(-0.9, 0.9);
  for (int i = 0; i < 1000; ++i) {
    const double t = unif(rng);
    PointC z = oracles::random_point_in_ball(rng, 2, 0.999);
    PointC image = ball_automorphism(t, z);
    CHECK(image.norm() < 1.0);
    CHECK((ball_automorphism(-t, image) - z).norm() <= 1e-12);
  }
  for (int i = 0; i < 100; ++i) {
    const double t = unif(rng);
    PointC q = oracles::random_point_in_ball(rng, 2, 1.0);
    q /= q.norm();
    CHECK(std::abs(ball_automorphism(t, q).norm() - 1.0) <= 1e-12);
  }
}

TEST_CASE("normalize_boundary sends p to e_1 with normal e_1") {
  Domain b = ball();
  auto id = normalize_boundary(b, pt(1, 0));
  CHECK((id.unitary - MatrixC::Identity(2, 2)).norm() <= 1e-12);
  CHECK(id.translation.norm() <= 1e-12);

  auto swap = normalize_boundary(b, pt(0, 1));
  CHECK((swap.apply(pt(0, 1)) - pt(1, 0)).norm() <= 1e-12);
  CHECK(std::abs(swap.unitary(0, 1)) == doctest::Approx(1.0));

  // ellipsoid at a second-axis point: image normal must equal e_1
  Domain ell = ellipsoid({1, 4});
  PointC p = pt(0, 0.5);
  auto map = normalize_boundary(ell, p);
  CHECK((map.apply(p) - pt(1, 0)).norm() <= 1e-12);
  Domain image = ell.transformed(map.affine());
  auto dv = image.defining_value(pt(1, 0));
  CHECK(std::abs(dv.value) <= 1e-12);
  VectorC normal = dv.gradient / dv.gradient.norm();
  CHECK((normal - pt(1, 0)).norm() <= 1e-10);

  // unitary invariant: rigid maps preserve pairwise distances
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    PointC x = oracles::random_point_in_ball(rng, 2, 0.9);
    PointC y = oracles::random_point_in_ball(rng, 2, 0.9);
    CHECK(std::abs((map.apply(x) - map.apply(y)).norm() - (x - y).norm()) <= 1e-12);
  }
  CHECK(map.affine().is_unitary());
  CHECK_THROWS_AS(normalize_boundary(b, pt(0.5, 0)), GeometryError);
}

TEST_CASE("osculating normalization of the ellipsoid is the exact ball") {
  Domain ell = ellipsoid({1, 4});
  auto norm = osculating_normalization(ell, pt(0, 0.5));
  CHECK(norm.exact);
  // image boundary points all have unit norm
  for (const auto& q : norm.domain.boundary_sample(200, 5u))
    CHECK(std::abs(q.norm() - 1.0) <= 1e-10);
  CHECK((norm.map.apply(pt(0, 0.5)) - pt(1, 0)).norm() <= 1e-12);
}

TEST_CASE("normal_ray_curve on the ball") {
  Domain b = ball();
  auto curve = normal_ray_curve(b, pt(0.5, 0), 0.2, 65);
  CHECK((curve.points.front() - pt(0.5, 0)).norm() <= 1e-14);
  CHECK((curve.points.back() - pt(0.3, 0)).norm() <= 1e-12);

  auto single = normal_ray_curve(b, pt(0.5, 0), 0.0);
  CHECK(single.size() == 1);

  // delta strictly increases along the ray
  double prev = -1.0;
  for (const auto& p : curve.points) {
    const double d = boundary_frame(b, p).delta;
    CHECK(d > prev - 1e-10);
    prev = d;
  }

  // ray through the center exits the far side before T = 1.6
  CHECK_THROWS_AS(normal_ray_curve(b, pt(0.5, 0), 1.6), RegionError);

  // ellipsoid: endpoint has strictly larger delta
  Domain ell = ellipsoid({1, 4});
  PointC z = pt(0.2, 0.3);
  auto ray = normal_ray_curve(ell, z, 0.05, 33);
  CHECK(boundary_frame(ell, ray.points.back()).delta >
        boundary_frame(ell, z).delta);
}

TEST_CASE("curve_kobayashi_length_upper: radial ray closed form") {
  Domain b = ball();
  auto curve = normal_ray_curve(b, pt(0.5, 0), 0.2, 10001);
  const double upper = curve_kobayashi_length_upper(b, curve);
  CHECK(upper == doctest::Approx(std::log(0.7 / 0.5)).epsilon(1e-3));

  SampledCurve single;
  single.times = {0.0};
  single.points = {pt(0.5, 0)};
  CHECK(curve_kobayashi_length_upper(b, single) == doctest::Approx(0.0));

  // upper-bound property against the exact distance
  std::mt19937_64 rng(4);
  for (int i = 0; i < 10; ++i) {
    PointC z = oracles::random_point_in_ball(rng, 2, 0.8);
    PointC w = oracles::random_point_in_ball(rng, 2, 0.8);
    SampledCurve chord;
    for (int s = 0; s <= 32; ++s) {
      chord.times.push_back(s / 32.0);
      chord.points.push_back(z + (s / 32.0) * (w - z));
    }
    CHECK(curve_kobayashi_length_upper(b, chord) >=
          kobayashi_ball(z, w) - 1e-9);
  }
}

TEST_CASE("scaling_hausdorff_defect") {
  Domain b = ball();
  CHECK(scaling_hausdorff_defect(b, 0.3, 500) <= 1e-12);
  CHECK(scaling_hausdorff_defect(b, 0.99, 500) <= 1e-12);

  // rigidly normalized ellipsoid: defect decreases from t = 0.9 to t = 0.99
  Domain ell = ellipsoid({1, 4});
  auto rigid = normalize_boundary(ell, pt(0, 0.5));
  Domain normalized = ell.transformed(rigid.affine());
  const double at0 = scaling_hausdorff_defect(normalized, 0.0, 2000);
  const double at90 = scaling_hausdorff_defect(normalized, 0.9, 2000);
  const double at99 = scaling_hausdorff_defect(normalized, 0.99, 2000);
  CHECK(at99 < at90);
  CHECK(at90 < at0);  // t = 0 exposes the raw Hausdorff gap
}

TEST_CASE("normal ray pair curve stays interior and reaches both points") {
  Domain b = ball();
  PointC z = pt(0.9, 0.1), w = pt(0.9, -0.1);
  auto tent = normal_ray_pair_curve(b, z, w, 0.1);
  CHECK((tent.points.front() - z).norm() <= 1e-12);
  CHECK((tent.points.back() - w).norm() <= 1e-12);
  for (const auto& p : tent.points) CHECK(b.contains(p));
  for (std::size_t i = 1; i < tent.size(); ++i)
    CHECK(tent.times[i] > tent.times[i - 1]);
}
