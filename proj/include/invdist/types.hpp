#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace invdist {

using Complex = std::complex<double>;
using PointC = Eigen::VectorXcd;   // point of C^N
using VectorC = Eigen::VectorXcd;  // tangent vector of C^N
using MatrixC = Eigen::MatrixXcd;

// Hermitian pairing <z,w> = sum_j z_j * conj(w_j).
inline Complex inner(const VectorC& z, const VectorC& w) {
  return w.dot(z);  // Eigen: w.dot(z) = sum conj(w_j) z_j
}

inline double sqr(double x) { return x * x; }

// Points with a Euclidean boundary distance below this are rejected by
// operations that divide by delta^{1/2}; clamping would silently corrupt
// calibration statistics.
inline constexpr double kDeltaFloor = 1e-12;

// Curve sampled at strictly increasing parameter values.
struct SampledCurve {
  std::vector<double> times;
  std::vector<PointC> points;

  std::size_t size() const { return times.size(); }
  double euclidean_length() const {
    double l = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i)
      l += (points[i] - points[i - 1]).norm();
    return l;
  }
};

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RegionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
  NumericError(const std::string& what, double residual_)
      : std::runtime_error(what), residual(residual_) {}
  double residual = 0.0;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SamplingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace invdist
