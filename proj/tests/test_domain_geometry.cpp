#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "invdist/boundary.hpp"
#include "invdist/domain.hpp"
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

Domain s9() {
  DomainSpec spec;
  spec.family = DomainFamily::LocalModelS9;
  spec.dim = 2;
  return Domain(spec);
}

Domain perturbed(double amp) {
  DomainSpec spec;
  spec.family = DomainFamily::PerturbedBall;
  spec.dim = 2;
  spec.amplitude = amp;
  spec.bump_width = 0.8;
  return Domain(spec);
}

PointC pt(Complex a, Complex b) {
  PointC p(2);
  p << a, b;
  return p;
}

}  // namespace

TEST_CASE("defining_value on the models") {
  CHECK(ball().rho(pt(0, 0)) == doctest::Approx(-1.0));
  auto dv = ball().defining_value(pt(1, 0));
  CHECK(dv.value == doctest::Approx(0.0));
  CHECK(std::abs(dv.gradient(0)) > 0);
  CHECK(std::abs(dv.gradient(1)) == doctest::Approx(0.0));

  // local model: rho(-0.01, 0) = -0.01
  CHECK(s9().rho(pt(-0.01, 0)) == doctest::Approx(-0.01));
  CHECK_THROWS_AS(s9().rho(pt(0.5, 0)), RegionError);
}

TEST_CASE("analytic gradients match finite differences") {
  std::mt19937_64 rng(42);
  auto check_family = [&](const Domain& dom, double scale) {
    for (int i = 0; i < 100; ++i) {
      PointC z = oracles::random_point_in_ball(rng, dom.dim(), scale);
      auto dv = dom.defining_value(z);
      VectorC fd = oracles::fd_gradient(dom, z);
      CHECK((dv.gradient - fd).norm() <= 1e-6 * std::max(1.0, fd.norm()));
    }
  };
  check_family(ball(), 0.95);
  check_family(ellipsoid({1, 4}), 0.45);
  check_family(s9(), 0.2);
  check_family(perturbed(0.03), 0.9);
}

TEST_CASE("complex hessian matches finite differences of the gradient") {
  // d/dz_j of (2 dbar rho)_k recovers 2 H_kj + 2 (dz dz rho)_kj; probing with
  // both v and iv isolates the Hermitian part
  std::mt19937_64 rng(7);
  for (const Domain& dom : {ball(3), ellipsoid({1, 2, 4}), perturbed(0.02)}) {
    for (int i = 0; i < 20; ++i) {
      PointC z = oracles::random_point_in_ball(rng, dom.dim(), 0.4);
      VectorC v = oracles::random_vector(rng, dom.dim());
      v /= v.norm();
      const double h = 1e-5;
      auto dvp = dom.defining_value(z + h * v);
      auto dvm = dom.defining_value(z - h * v);
      auto dvpi = dom.defining_value(z + h * Complex(0, 1) * v);
      auto dvmi = dom.defining_value(z - h * Complex(0, 1) * v);
      // Hermitian part: ( D_v + D_iv / i ) / 2 acting on 2 dbar rho
      VectorC dv_real = (dvp.gradient - dvm.gradient) / (2 * h);
      VectorC dv_imag = (dvpi.gradient - dvmi.gradient) / (2 * h);
      VectorC hermitian = 0.5 * (dv_real + Complex(0, -1) * dv_imag);
      auto dv0 = dom.defining_value(z);
      VectorC expected = 2.0 * (dv0.complex_hessian.transpose() * v);
      CHECK((hermitian - expected).norm() <= 1e-5 * std::max(1.0, expected.norm()));
    }
  }
}

TEST_CASE("boundary_frame on the ball is exact") {
  Domain dom = ball();
  auto f = boundary_frame(dom, pt(0.5, 0));
  CHECK(f.delta == doctest::Approx(0.5).epsilon(1e-12));
  CHECK((f.projection - pt(1, 0)).norm() <= 1e-12);
  CHECK((f.outer_normal - pt(1, 0)).norm() <= 1e-12);
  CHECK(f.unique_projection);

  auto center = boundary_frame(dom, pt(0, 0));
  CHECK(center.delta == doctest::Approx(1.0));
  CHECK_FALSE(center.unique_projection);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    PointC z = oracles::random_point_in_ball(rng, 2, 0.999);
    if (z.norm() < 1e-6) continue;
    auto fr = boundary_frame(dom, z);
    CHECK(std::abs(fr.delta - (1.0 - z.norm())) <= 1e-12);
    CHECK((fr.projection - z / z.norm()).norm() <= 1e-12);
  }
}

TEST_CASE("boundary_frame invariants on all families") {
  std::mt19937_64 rng(11);
  auto check_dom = [&](const Domain& dom, double scale, double tol) {
    for (int i = 0; i < 60; ++i) {
      PointC z = oracles::random_point_in_ball(rng, dom.dim(), scale);
      if (!dom.contains(z)) continue;
      auto f = boundary_frame(dom, z);
      CHECK(std::abs(dom.rho(f.projection)) <= tol);
      CHECK(std::abs((f.projection - z).norm() - f.delta) <= tol);
      CHECK(std::abs(f.outer_normal.norm() - 1.0) <= 1e-12);
      // outer normal parallel to the gradient at the projection
      auto dv = dom.defining_value(f.projection);
      VectorC unit_grad = dv.gradient / dv.gradient.norm();
      CHECK((f.outer_normal - unit_grad).norm() <= 1e-8);
    }
  };
  check_dom(ball(), 0.999, 1e-10);
  check_dom(ellipsoid({1, 4}), 0.45, 1e-10);
  check_dom(s9(), 0.15, 1e-10);
  check_dom(perturbed(0.03), 0.9, 1e-8);
}

TEST_CASE("ellipsoid projection agrees with the dense-scan oracle") {
  Domain dom = ellipsoid({1, 4});
  // center: closest boundary point lies on the |z_2| axis at distance 0.5
  auto f = boundary_frame(dom, pt(0, 0));
  CHECK(f.delta == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(std::abs(f.projection(1)) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK_FALSE(f.unique_projection);

  std::mt19937_64 rng(19);
  for (int i = 0; i < 5; ++i) {
    PointC z = oracles::random_point_in_ball(rng, 2, 0.4);
    auto fr = boundary_frame(dom, z);
    auto [q, d] = oracles::brute_force_projection(dom, z, 1000 + i);
    CHECK(fr.delta == doctest::Approx(d).epsilon(1e-5));
  }
}

TEST_CASE("normal_components identities") {
  BoundaryFrame frame;
  frame.delta = 0.5;
  frame.projection = pt(1, 0);
  frame.outer_normal = pt(1, 0);

  auto nc = normal_components(frame, pt(Complex(0.3, 0.1), Complex(2, -1)));
  CHECK(nc.complex_normal_mag == doctest::Approx(std::abs(Complex(0.3, 0.1))));

  auto tangent_only = normal_components(frame, pt(0, Complex(5, 2)));
  CHECK(tangent_only.complex_normal_mag == doctest::Approx(0.0));
  CHECK((tangent_only.tangential - pt(0, Complex(5, 2))).norm() <= 1e-15);

  // purely imaginary pairing: complex mag 1, real mag 0
  auto imag = normal_components(frame, pt(Complex(0, 1), 0));
  CHECK(imag.complex_normal_mag == doctest::Approx(1.0));
  CHECK(imag.real_normal_mag == doctest::Approx(0.0));

  // Pythagoras for the decomposition
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    VectorC v = oracles::random_vector(rng, 2);
    auto d = normal_components(frame, v);
    CHECK(std::abs(v.squaredNorm() - sqr(d.complex_normal_mag) -
                   d.tangential.squaredNorm()) <= 1e-10);
  }
}

TEST_CASE("levi_minimum: positivity and symmetry") {
  Domain b3 = ball(3);
  PointC p1(3), p2(3);
  p1 << 1, 0, 0;
  p2 << Complex(0, 0.6), 0.8, 0;
  const double l1 = levi_minimum(b3, p1);
  const double l2 = levi_minimum(b3, p2);
  CHECK(l1 > 0);
  CHECK(l1 == doctest::Approx(l2).epsilon(1e-10));  // unitary symmetry

  Domain ell = ellipsoid({1, 4});
  PointC axis = pt(0, 0.5);
  const double le = levi_minimum(ell, axis);
  CHECK(le > 0);
  CHECK(le == doctest::Approx(oracles::levi_min_scan(ell, axis)).epsilon(2e-3));

  // local model at 0: Levi form positive despite degenerate linear convexity
  CHECK(levi_minimum(s9(), pt(0, 0)) > 0);

  // perturbed ball with small amplitude stays strongly pseudoconvex
  Domain pb = perturbed(0.03);
  for (auto& q : pb.boundary_sample(50, 31u)) CHECK(levi_minimum(pb, q) > 0);

  CHECK_THROWS_AS(levi_minimum(ball(), pt(0.2, 0)), GeometryError);
}

TEST_CASE("slc_lambda: ball constant, ellipsoid varies, s9 degenerate") {
  Domain b = ball();
  CHECK(slc_lambda(b, pt(1, 0)) == doctest::Approx(0.5));
  auto detail = slc_lambda_detail(b, pt(1, 0));
  CHECK(detail.half_hessian == doctest::Approx(0.5).epsilon(1e-4));
  CHECK(detail.full_hessian == doctest::Approx(1.0).epsilon(1e-4));
  auto rotated = slc_lambda_detail(b, pt(Complex(0, 1), 0));
  CHECK(rotated.half_hessian == doctest::Approx(0.5).epsilon(1e-4));

  Domain ell = ellipsoid({1, 4});
  const double l_axis2 = slc_lambda(ell, pt(0, 0.5));
  const double l_axis1 = slc_lambda(ell, pt(1, 0));
  CHECK(l_axis2 > 0);
  CHECK(l_axis1 > 0);
  CHECK(l_axis2 != doctest::Approx(l_axis1).epsilon(1e-3));  // varies along the boundary

  // second-difference oracle along an explicit tangent direction of the
  // ellipsoid at (0, 1/2): direction e_1 is complex tangent there
  {
    const double h = 1e-4;
    auto sd = [&](double t) {
      return signed_distance(ell, pt(t, 0.5));
    };
    const double q = (sd(h) + sd(-h)) / (h * h);  // full Hessian form
    auto d = slc_lambda_detail(ell, pt(0, 0.5));
    CHECK(d.full_hessian <= q + 1e-3);  // lambda is the minimum over directions
  }

  const double s9_lambda = slc_lambda(s9(), pt(0, 0));
  CHECK(std::abs(s9_lambda) <= 1e-6);  // degenerate direction
}

TEST_CASE("signed distance flips sign across the boundary") {
  Domain dom = ellipsoid({1, 4});
  CHECK(signed_distance(dom, pt(0.5, 0)) < 0);
  CHECK(signed_distance(dom, pt(1.5, 0)) > 0);
  CHECK(std::abs(signed_distance(dom, pt(1.5, 0)) - 0.5) <= 1e-8);
}

TEST_CASE("config parsing round trip") {
  Domain dom = domain_from_config_text(
      "# ellipsoid demo\nfamily = ellipsoid\ndim = 2\ncoeffs = 1, 4\n");
  CHECK(dom.spec().family == DomainFamily::Ellipsoid);
  CHECK(dom.spec().coeffs[1] == doctest::Approx(4.0));

  CHECK_THROWS_AS(domain_from_config_text("dim = 2\n"), ConfigError);
  CHECK_THROWS_AS(domain_from_config_text("family = banana\n"), ConfigError);
  CHECK_THROWS_AS(
      domain_from_config_text("family = ellipsoid\ndim = 2\ncoeffs = 1\n"),
      ConfigError);

  PointC z = parse_complex_tuple("0.5:0,-1:2.5");
  CHECK(z(0) == Complex(0.5, 0));
  CHECK(z(1) == Complex(-1, 2.5));
  CHECK(parse_complex_tuple(format_complex_tuple(z)) == z);
}
