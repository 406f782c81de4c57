#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "invdist/geodesics.hpp"
#include "oracles.hpp"

using namespace invdist;

namespace {

Domain ball(int n = 2) {
  DomainSpec spec;
  spec.family = DomainFamily::UnitBall;
  spec.dim = n;
  return Domain(spec);
}

PointC pt(Complex a, Complex b) {
  PointC p(2);
  p << a, b;
  return p;
}

std::pair<PointC, VectorC> random_slice_frame(std::mt19937_64& rng) {
  PointC q = oracles::random_point_in_ball(rng, 2, 1.0);
  q /= q.norm();
  VectorC u = oracles::random_vector(rng, 2);
  u -= inner(u, q) * q;
  u /= u.norm();
  return {q, u};
}

}  // namespace

TEST_CASE("reparametrize_max_delta on ball slices") {
  Domain b = ball();
  // the diameter disc is already maximal at 0
  DiscMap diameter;
  diameter.center = PointC::Zero(2);
  diameter.direction = pt(1, 0);
  diameter.a = 1.0;
  auto re = reparametrize_max_delta(b, diameter);
  CHECK(re.center.norm() <= 1e-6);
  CHECK(std::abs(std::abs(re.a) - 1.0) <= 1e-6);

  // an off-center sub-disc of a tilted slice recenters to the slice top
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10; ++i) {
    auto [q, u] = random_slice_frame(rng);
    const double s = 0.2;
    DiscMap sub;
    sub.center = (1.0 - s) * q;
    sub.direction = u;
    sub.a = 0.15;
    sub.b = Complex(0.3, 0.2);  // distinguished point away from the top
    auto fixed = reparametrize_max_delta(b, sub);
    // max-delta point of the full slice is the Euclidean slice center
    CHECK((fixed.at(0.0) - sub.center).norm() <= 1e-4);
    auto inv = disc_invariants(b, fixed, 128);
    CHECK(inv.tangency_defect <= 1e-6);
    // idempotence
    auto again = reparametrize_max_delta(b, fixed);
    CHECK((again.at(0.0) - fixed.at(0.0)).norm() <= 1e-4);
  }
}

TEST_CASE("disc_invariants: diameter disc and shallow slices") {
  Domain b = ball();
  DiscMap diameter;
  diameter.center = PointC::Zero(2);
  diameter.direction = pt(1, 0);
  diameter.a = 1.0;
  auto inv = disc_invariants(b, diameter, 256);
  CHECK(inv.diameter == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(inv.max_delta == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(inv.max_derivative == doctest::Approx(1.0));
  CHECK_FALSE(inv.resolution_warning);

  // slice at height 1 - s: d_e = 2 sqrt(2s - s^2), D = s (chord geometry)
  std::mt19937_64 rng(2);
  for (double s : {0.3, 0.05, 1e-3}) {
    auto [q, u] = random_slice_frame(rng);
    auto slice = ball_slice(s, q, u);
    auto si = disc_invariants(b, slice, 256);
    CHECK(si.diameter ==
          doctest::Approx(2.0 * std::sqrt(2 * s - s * s)).epsilon(1e-10));
    CHECK(si.max_delta == doctest::Approx(s).epsilon(1e-7));
    CHECK(si.diameter / std::sqrt(si.max_delta) ==
          doctest::Approx(2.0 * std::sqrt(2.0 - s)).epsilon(1e-6));
  }
}

TEST_CASE("prop4 ratios stay in fixed bands over random slices") {
  Domain b = ball();
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double r1_lo = 1e300, r1_hi = 0.0, r2_lo = 1e300, r2_hi = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double s = 1e-4 * std::exp(std::log(1.0 / 1e-4) * unif(rng));
    auto [q, u] = random_slice_frame(rng);
    auto inv = disc_invariants(b, ball_slice(s, q, u), 128);
    const double r1 = inv.diameter / std::sqrt(inv.max_delta);
    const double r2 = inv.max_derivative / inv.diameter;
    r1_lo = std::min(r1_lo, r1);
    r1_hi = std::max(r1_hi, r1);
    r2_lo = std::min(r2_lo, r2);
    r2_hi = std::max(r2_hi, r2);
  }
  CHECK(r1_hi / r1_lo <= 10.0);
  CHECK(r2_hi / r2_lo <= 10.0);
  CHECK(r1_lo >= 1.9);  // 2 sqrt(2-s) with s <= 1
  CHECK(r1_hi <= 2.0 * std::sqrt(2.0) + 1e-6);
}

TEST_CASE("theorem5_balance") {
  Domain b = ball();
  DiscMap diameter;
  diameter.center = PointC::Zero(2);
  diameter.direction = pt(1, 0);
  diameter.a = 1.0;
  // variant with the frame at z = (0.1, 0): (1 + sqrt(0.9) + 0.4) / 2
  const double expected = (1.0 + std::sqrt(0.9) + 0.4) / 2.0;
  CHECK(theorem5_balance(b, diameter, pt(0.1, 0), pt(0.5, 0)) ==
        doctest::Approx(expected).epsilon(1e-9));
  CHECK(expected == doctest::Approx(1.1743416490252569));
  CHECK_THROWS_AS(theorem5_balance(b, diameter, pt(0.1, 0), pt(0.1, 0)),
                  GeometryError);
  CHECK_THROWS_AS(theorem5_balance(b, diameter, pt(0.1, 0.2), pt(0.5, 0)),
                  GeometryError);

  // unitary invariance
  std::mt19937_64 rng(4);
  std::normal_distribution<double> gauss(0.0, 1.0);
  MatrixC m(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
  MatrixC u = Eigen::HouseholderQR<MatrixC>(m).householderQ();
  DiscMap rotated;
  rotated.center = u * diameter.center;
  rotated.direction = u * diameter.direction;
  rotated.a = diameter.a;
  CHECK(theorem5_balance(b, rotated, u * pt(0.1, 0), u * pt(0.5, 0)) ==
        doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("length_ratios") {
  Domain b = ball();
  // straight diameter segment: gehring = 1
  SampledCurve seg;
  for (int i = 0; i <= 100; ++i) {
    seg.times.push_back(i / 100.0);
    seg.points.push_back(pt(-0.9 + 1.8 * i / 100.0, 0));
  }
  auto lr = length_ratios(b, seg);
  CHECK(lr.gehring == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lr.max_delta == doctest::Approx(1.0).epsilon(1e-4));

  SampledCurve degenerate;
  degenerate.times = {0.0, 1.0};
  degenerate.points = {pt(0.1, 0), pt(0.1, 0)};
  CHECK_THROWS_AS(length_ratios(b, degenerate), GeometryError);

  // near-boundary geodesics: gehring below the circle-arc bound pi/2,
  // prop3 ratio bounded across boundary proximities
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unif(0.0, 2 * M_PI);
  double gehring_max = 0.0, prop3_max = 0.0;
  for (double s : {0.5, 0.1, 1e-2, 1e-3, 1e-4}) {
    for (int i = 0; i < 40; ++i) {
      const double r = std::sqrt(1.0 - s * s);
      PointC z = pt(std::polar(r, unif(rng)), 0);
      PointC w = pt(std::polar(r, unif(rng)), 0);
      if ((z - w).norm() < 1e-6) continue;
      auto curve = real_geodesic_ball(z, w, 2049);
      auto ratios = length_ratios(b, curve);
      gehring_max = std::max(gehring_max, ratios.gehring);
      prop3_max = std::max(prop3_max, ratios.prop3);
    }
  }
  CHECK(gehring_max <= M_PI / 2 + 0.01);
  CHECK(prop3_max <= 2.2);  // observed circle-arc bound ~2.12
}
