#pragma once

#include "invdist/bounds.hpp"
#include "invdist/boundary.hpp"
#include "invdist/domain.hpp"

namespace invdist {

// m_t(zeta) = (zeta + t) / (1 + t zeta); self-map of the closed disc.
Complex mobius(double t, Complex zeta);

// A_t(z) = (m_t(z_1), (1-t^2)^{1/2} z' / (1 + t z_1)); automorphism of the
// unit ball that fixes e_1. Throws on a vanishing denominator.
PointC ball_automorphism(double t, const PointC& z);

// Unitary + translation: z -> unitary * z + translation.
struct RigidMap {
  MatrixC unitary;
  VectorC translation;

  PointC apply(const PointC& z) const { return unitary * z + translation; }
  RigidMap inverse() const;
  AffineMap affine() const { return AffineMap{unitary, translation}; }
};

// Rigid map sending the boundary point p to e_1 and the outer unit normal
// at p to e_1.
RigidMap normalize_boundary(const Domain& domain, const PointC& p);

// Exact second-order normalization where affine maps suffice:
//   unit ball  — normalize_boundary already gives the identity model;
//   ellipsoid  — rescaled to the unit ball, then rotated (image is exactly
//                the unit ball).
// For the perturbed ball only the rigid part is applied and the residual
// second-order defect of the image boundary at e_1 is reported instead of
// corrected.
struct NormalizedDomain {
  Domain domain;             // image domain
  AffineMap map;             // the applied change of coordinates
  bool exact = true;         // true when the image is exactly the unit ball
  double second_order_defect = 0.0;
};

NormalizedDomain osculating_normalization(const Domain& domain, const PointC& p);

// Inward normal ray from z sampled on [0, T]. Throws RegionError (with the
// maximal admissible parameter in the message) when the ray exits before T.
SampledCurve normal_ray_curve(const Domain& domain, const PointC& z, double T,
                              int samples = 129);

// Two normal rays joined through their inner endpoints; the discontinuous
// curve of the quasi-geodesic construction traversed as a polyline.
SampledCurve normal_ray_pair_curve(const Domain& domain, const PointC& z,
                                   const PointC& w, double fraction = 0.1);

// Upper bound for the Kobayashi length of a sampled curve: composite
// trapezoid of the per-point upper Royden bound over the polyline,
// Richardson-refined until the relative change drops below 1e-4.
double curve_kobayashi_length_upper(const Domain& domain, const SampledCurve& curve,
                                    Backend backend = Backend::Interval);

// max over sampled boundary points q of | |A_{-t}(q)| - 1 | restricted to
// Re z_1 > -1/2; the domain is expected to be pre-normalized (boundary
// point at e_1, outer normal e_1).
double scaling_hausdorff_defect(const Domain& domain, double t, int boundary_samples,
                                std::uint64_t seed = 20240u);

}  // namespace invdist
