#pragma once

#include <string>

#include "invdist/types.hpp"

namespace invdist {

// Affine analytic disc phi(zeta) = center + (a*zeta + b) * direction with
// unit direction; for a != 0 it parametrizes a round disc inside the
// complex line through `center` spanned by `direction`.
struct DiscMap {
  PointC center;
  VectorC direction;
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};

  PointC at(Complex zeta) const { return center + (a * zeta + b) * direction; }
  VectorC derivative() const { return a * direction; }  // constant in zeta
  std::string to_json() const;
};

// Invariant (= Kobayashi = Caratheodory = Lempert) distance of the unit
// ball, via the Mobius-invariant closed form arranged to avoid
// cancellation near the sphere:
//   k = log( (|1-<z,w>| + sqrt(D)) / sqrt((1-|z|^2)(1-|w|^2)) ),
//   D = |z-w|^2 (1-|z|^2) + |<z-w, z>|^2.
double kobayashi_ball(const PointC& z, const PointC& w);

// Same distance in the ball B(center, radius).
double kobayashi_ball(const PointC& z, const PointC& w, const PointC& center,
                      double radius);

// Kobayashi-Royden metric of the unit ball.
double royden_ball(const PointC& z, const VectorC& v);
double royden_ball(const PointC& z, const VectorC& v, const PointC& center,
                   double radius);

struct BergmanValue {
  double kernel = 0.0;  // Bergman kernel on the diagonal
  double metric = 0.0;  // Bergman metric length of v at z
};

BergmanValue bergman_ball(const PointC& z, const VectorC& v);

// Bergman distance of the ball: the Bergman metric integrated along the
// Kobayashi geodesic, refinement-converged to the given tolerance.
double bergman_distance_ball(const PointC& z, const PointC& w, double tol = 1e-4);

// The ball's complex geodesic through z and w: the slice of the ball by
// the affine complex line through the two points, parametrized with its
// Euclidean center (= the max-delta point) at zeta = 0.
DiscMap complex_geodesic_ball(const PointC& z, const PointC& w);

// Disc parameter of a point on the image line of a disc map.
Complex disc_pullback(const DiscMap& disc, const PointC& z);

// Real Kobayashi geodesic from z to w sampled at `samples` points,
// obtained by transporting the disc geodesic through the complex geodesic.
SampledCurve real_geodesic_ball(const PointC& z, const PointC& w, int samples);

// Poincare distance of the unit disc.
double hyperbolic_disc_distance(Complex a, Complex b);

}  // namespace invdist
