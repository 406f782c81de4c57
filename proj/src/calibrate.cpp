#include <cmath>

#include "invdist/estimators.hpp"
#include "invdist/harness.hpp"
#include "invdist/util.hpp"

namespace invdist {

namespace {

CalibrationReport calibrate_once(const Domain& domain, Backend backend,
                                 const std::vector<SampleRegime>& regimes,
                                 DistanceKind distance, int path_segments) {
  CalibrationReport report;
  report.backend = backend;
  report.distance = distance;
  if (distance == DistanceKind::Bergman && backend != Backend::ExactBall)
    throw CapabilityError(
        "the Bergman branch is available only on the ball (exact backend)");

  std::vector<std::pair<PointC, PointC>> pairs;
  std::vector<RegimeKind> kinds;
  for (const auto& regime : regimes) {
    auto batch = sample_pairs(domain, regime);
    for (auto& p : batch) {
      pairs.push_back(std::move(p));
      kinds.push_back(regime.kind);
    }
  }

  std::vector<CalibrationRow> rows(pairs.size());
  std::vector<char> keep(pairs.size(), 0);
  std::vector<char> excluded(pairs.size(), 0);
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto& [z, w] = pairs[i];
    CalibrationRow row;
    row.pair_id = static_cast<int>(i);
    row.regime = kinds[i];
    row.z = z;
    row.w = w;
    if ((z - w).norm() < 1e-9) {  // A and e^k - 1 both vanish linearly
      excluded[i] = 1;
      return;
    }
    try {
      BoundaryFrame fz = boundary_frame(domain, z);
      BoundaryFrame fw = boundary_frame(domain, w);
      row.delta_z = fz.delta;
      row.delta_w = fw.delta;
      row.A = a_quantity(domain, z, w);
      if (backend == Backend::ExactBall) {
        const double k = distance == DistanceKind::Bergman
                             ? bergman_distance_ball(z, w, 1e-4)
                             : kobayashi_ball(z, w);
        row.k_lower = k;
        row.k_upper = k;
      } else {
        IntervalValue iv =
            kobayashi_interval(domain, z, w, backend, path_segments);
        row.k_lower = iv.lower;
        row.k_upper = iv.upper;
      }
      row.ratio_low = std::expm1(row.k_lower) / row.A;
      row.ratio_high = std::expm1(row.k_upper) / row.A;
      rows[i] = std::move(row);
      keep[i] = 1;
    } catch (const NumericError&) {
      // delta floor violations abort the affected pair, never the run
      excluded[i] = 1;
    }
  });

  double cmin = 1e300, cmax = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (excluded[i]) ++report.excluded_pairs;
    if (!keep[i]) continue;
    report.rows.push_back(rows[i]);
    cmin = std::min(cmin, rows[i].ratio_low);
    cmax = std::max(cmax, rows[i].ratio_high);
  }
  if (report.rows.empty()) throw SamplingError("calibration produced no usable pairs");
  report.c_emp = cmin;
  report.C_emp = cmax;
  return report;
}

}  // namespace

CalibrationReport calibrate_theorem1(const Domain& domain, Backend backend,
                                     const std::vector<SampleRegime>& regimes,
                                     DistanceKind distance, int path_segments) {
  CalibrationReport report =
      calibrate_once(domain, backend, regimes, distance, path_segments);
  // stability protocol: recompute every empirical constant at 2x samples
  std::vector<SampleRegime> doubled = regimes;
  for (auto& r : doubled) {
    r.count *= 2;
    r.seed = r.seed * 2 + 1;
  }
  CalibrationReport second =
      calibrate_once(domain, backend, doubled, distance, path_segments);
  report.c_emp_2x = second.c_emp;
  report.C_emp_2x = second.C_emp;
  report.stability_c = std::abs(second.c_emp - report.c_emp) / report.c_emp;
  report.stability_C = std::abs(second.C_emp - report.C_emp) / report.C_emp;
  return report;
}

GeodesicQuality quasi_geodesic_quality(const Domain& domain, const SampledCurve& curve,
                                       Backend backend, double eps_cap) {
  if (backend != Backend::ExactBall)
    throw CapabilityError(
        "quasi_geodesic_quality needs a backend that supplies the distance "
        "between curve samples (exact-ball)");
  if (domain.spec().family != DomainFamily::UnitBall || domain.has_premap())
    throw CapabilityError("exact-ball backend requires the unit ball");
  if (curve.size() < 2) return {1.0, 0.0};

  // cumulative Royden length along the sampled polyline (Gauss-8 per piece)
  static const double xs[4] = {0.1834346424956498, 0.5255324099163290,
                               0.7966664774136267, 0.9602898564975363};
  static const double ws[4] = {0.3626837833783620, 0.3137066458778873,
                               0.2223810344533745, 0.1012285362903763};
  std::vector<double> cumulative(curve.size(), 0.0);
  for (std::size_t i = 1; i < curve.size(); ++i) {
    const PointC& a = curve.points[i - 1];
    const VectorC v = curve.points[i] - curve.points[i - 1];
    double seg = 0.0;
    if (v.norm() > 0) {
      for (int q = 0; q < 4; ++q)
        for (double sgn : {-1.0, 1.0}) {
          const double t = 0.5 * (1.0 + sgn * xs[q]);
          seg += ws[q] * royden_ball(a + t * v, v);
        }
      seg *= 0.5;
    }
    cumulative[i] = cumulative[i - 1] + seg;
  }

  // decimated index set: all sub-segment pairs of ~32 anchors
  std::vector<std::size_t> anchors;
  const std::size_t stride = std::max<std::size_t>(1, curve.size() / 32);
  for (std::size_t i = 0; i < curve.size(); i += stride) anchors.push_back(i);
  if (anchors.back() != curve.size() - 1) anchors.push_back(curve.size() - 1);

  GeodesicQuality best{4.0, 0.0};
  bool found = false;
  for (double lambda = 1.0; lambda <= 4.0 + 1e-9; lambda += 0.25) {
    double eps = 0.0;
    for (std::size_t a = 0; a < anchors.size(); ++a)
      for (std::size_t b = a + 1; b < anchors.size(); ++b) {
        const double len = cumulative[anchors[b]] - cumulative[anchors[a]];
        const double k =
            kobayashi_ball(curve.points[anchors[a]], curve.points[anchors[b]]);
        eps = std::max(eps, len - lambda * k);
      }
    if (lambda >= 4.0 - 1e-9 && !found) {
      best = {lambda, std::max(0.0, eps)};
    }
    if (eps <= eps_cap) {
      best = {lambda, std::max(0.0, eps)};
      found = true;
      break;
    }
  }
  return best;
}

}  // namespace invdist
