#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invdist/types.hpp"

namespace invdist {

enum class DomainFamily { UnitBall, Ellipsoid, LocalModelS9, PerturbedBall };

std::string family_name(DomainFamily f);

// Analytic model domain given by a defining function rho with rho < 0 inside.
struct DomainSpec {
  DomainFamily family = DomainFamily::UnitBall;
  int dim = 2;
  std::vector<double> coeffs;  // ellipsoid: a_1..a_N > 0
  double amplitude = 0.0;      // perturbed ball bump height
  PointC bump_center;          // perturbed ball: bump location on the sphere
  double bump_width = 0.7;     // perturbed ball bump width
  double holder_alpha = 1.0;   // boundary regularity exponent (metadata only)
  double working_radius = 0.25;  // local model: bounding ball about the origin
};

// rho(z) together with its exact first and second order data.
// `gradient` is the real gradient identified with a complex vector,
// i.e. 2*dbar(rho); `complex_hessian` is d^2 rho / dz_j dzbar_k.
struct DefiningValue {
  double value = 0.0;
  VectorC gradient;
  MatrixC complex_hessian;
};

// Complex-affine change of coordinates w = linear * z + offset.
struct AffineMap {
  MatrixC linear;
  VectorC offset;

  PointC apply(const PointC& z) const { return linear * z + offset; }
  AffineMap inverse() const;
  bool is_unitary(double tol = 1e-12) const;
};

// A model domain, optionally carried through an affine change of coordinates
// (used by the boundary normalizations; the defining data is pulled back
// exactly through the map).
class Domain {
 public:
  Domain() : Domain(DomainSpec{}) {}
  explicit Domain(DomainSpec spec);

  const DomainSpec& spec() const { return spec_; }
  int dim() const { return spec_.dim; }

  // Exact value / gradient / complex Hessian of the defining function.
  // Throws RegionError outside the working region of LocalModelS9.
  DefiningValue defining_value(const PointC& z) const;

  double rho(const PointC& z) const;

  // Full real Hessian of rho as a 2N x 2N matrix over coordinates
  // (x_1, y_1, ..., x_N, y_N); needed by the projection solver.
  Eigen::MatrixXd real_hessian(const PointC& z) const;

  bool in_working_region(const PointC& z) const;
  bool contains(const PointC& z) const;

  // Radius of a ball about the origin certified to contain the domain
  // (in the current coordinates).
  double circumradius() const;
  // Enclosing ball used for distance monotonicity: {center, radius}.
  PointC enclosing_center() const;
  double enclosing_radius() const;

  // Deterministic boundary point samples (directions seeded).
  std::vector<PointC> boundary_sample(int count, std::uint64_t seed) const;

  // Same domain viewed through z -> map(z); the defining function is
  // pulled back through the inverse map.
  Domain transformed(const AffineMap& map) const;
  bool has_premap() const { return premap_.has_value(); }
  const AffineMap& premap() const { return *premap_; }
  // base-family coordinates of a point / direction in current coordinates
  PointC base_point(const PointC& z) const { return to_base(z); }
  VectorC base_direction(const VectorC& v) const {
    return premap_inv_ ? VectorC(premap_inv_->linear * v) : v;
  }

 private:
  PointC to_base(const PointC& z) const;

  DomainSpec spec_;
  std::optional<AffineMap> premap_;      // base -> current coordinates
  std::optional<AffineMap> premap_inv_;  // current -> base coordinates
};

// Construct a domain from the structured text configuration
// (key = value lines; see README for the schema).
Domain domain_from_config_text(const std::string& text);
Domain domain_from_config_file(const std::string& path);

// Parse "re:im,re:im,..." into a complex tuple.
PointC parse_complex_tuple(const std::string& text);
std::string format_complex_tuple(const PointC& z);

}  // namespace invdist
