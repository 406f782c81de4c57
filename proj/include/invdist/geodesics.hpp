#pragma once

#include "invdist/ball.hpp"
#include "invdist/boundary.hpp"
#include "invdist/domain.hpp"

namespace invdist {

struct DiscInvariants {
  double diameter = 0.0;         // Euclidean diameter of the image
  double max_delta = 0.0;        // max boundary distance over the image
  double max_derivative = 0.0;   // max |phi'|
  double tangency_defect = 0.0;  // |<phi'(0), eta>| / |phi'(0)|
  bool resolution_warning = false;
};

// Re-center an affine disc so that phi(0) attains the maximal boundary
// distance over the slice of the domain by the disc's complex line:
// the image is extended to the full slice and parametrized from the
// max-delta point (exact for the ball, where complex geodesics are full
// affine slices and the max-delta point is the slice center). Grid search
// plus golden-section refinement; throws GeometryError when the maximizer
// sits on the boundary circle.
DiscMap reparametrize_max_delta(const Domain& domain, const DiscMap& disc,
                                int grid = 256);

DiscInvariants disc_invariants(const Domain& domain, const DiscMap& disc,
                               int grid = 256);

// Ratio of |(z-w)_z|/|z-w| + sqrt(delta_z) + |z-w| to the disc diameter.
double theorem5_balance(const Domain& domain, const DiscMap& disc, const PointC& z,
                        const PointC& w);

struct LengthRatios {
  double gehring = 0.0;  // l(curve) / |endpoint gap|
  double prop3 = 0.0;    // l(curve) / sqrt(max delta along curve)
  double max_delta = 0.0;
  double length = 0.0;
};

LengthRatios length_ratios(const Domain& domain, const SampledCurve& curve);

// Ball slice with prescribed max-delta parameter s: center (1-s) q with a
// direction u orthogonal to q, so delta(phi(0)) = s.
DiscMap ball_slice(double s, const PointC& q_unit, const VectorC& u_unit);

}  // namespace invdist
