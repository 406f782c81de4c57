#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "invdist/bounds.hpp"
#include "invdist/domain.hpp"

namespace invdist {

enum class RegimeKind { Transversal, Tangential, Mixed, Interior };

RegimeKind regime_from_string(const std::string& name);
std::string regime_name(RegimeKind k);

// Tangential pairs: normal share |(z-w)_{pi(z)}| / |z-w| <= 0.05;
// transversal: >= 0.5.
struct SampleRegime {
  RegimeKind kind = RegimeKind::Mixed;
  double delta_min = 1e-4;
  double delta_max = 0.5;
  int count = 100;
  std::uint64_t seed = 1u;
};

// Deterministic seeded pairs satisfying the regime's angular and delta
// constraints; rejection sampled with a cap of 1e6 draws. Throws
// SamplingError naming the violated constraint when the cap is exceeded.
std::vector<std::pair<PointC, PointC>> sample_pairs(const Domain& domain,
                                                    const SampleRegime& regime);

// Seeded interior points with delta in range.
std::vector<PointC> sample_points(const Domain& domain, double delta_min,
                                  double delta_max, int count, std::uint64_t seed);

enum class DistanceKind { Kobayashi, Bergman };

struct CalibrationRow {
  int pair_id = 0;
  RegimeKind regime = RegimeKind::Mixed;
  PointC z, w;
  double delta_z = 0.0, delta_w = 0.0;
  double A = 0.0;
  double k_lower = 0.0, k_upper = 0.0;
  double ratio_low = 0.0, ratio_high = 0.0;  // (e^k - 1) / A at both ends
};

struct CalibrationReport {
  std::vector<CalibrationRow> rows;
  double c_emp = 0.0;       // min ratio_low
  double C_emp = 0.0;       // max ratio_high
  double c_emp_2x = 0.0;    // the same constants at doubled samples
  double C_emp_2x = 0.0;
  double stability_c = 0.0; // relative change under doubling
  double stability_C = 0.0;
  int excluded_pairs = 0;   // |z - w| < 1e-9 exclusions
  Backend backend = Backend::ExactBall;
  DistanceKind distance = DistanceKind::Kobayashi;
};

// Calibration of the empirical sandwich constants over the given regimes.
// On the ball with the exact backend ratio_low == ratio_high; the interval
// backend brackets. Delta floor violations skip the affected pair.
CalibrationReport calibrate_theorem1(const Domain& domain, Backend backend,
                                     const std::vector<SampleRegime>& regimes,
                                     DistanceKind distance = DistanceKind::Kobayashi,
                                     int path_segments = 16);

struct GeodesicQuality {
  double lambda = 1.0;
  double epsilon = 0.0;
};

// Smallest lambda on the grid {1, 1.25, ..., 4} whose minimal additive
// defect max(0, length - lambda k) over sampled sub-segments stays within
// eps_cap; epsilon is that defect. Falls back to the grid maximum with its
// defect when no lambda meets the cap.
GeodesicQuality quasi_geodesic_quality(const Domain& domain, const SampledCurve& curve,
                                       Backend backend, double eps_cap = 2.0);

struct SuiteResult {
  std::string name;
  bool pass = false;
  std::vector<std::string> notes;
  std::map<std::string, double> stats;
};

enum class Suite {
  Prop2,
  Prop3,
  Prop4,
  Thm5,
  BaloghBonk,
  Symmetry,
  GehringHayman,
  S9Example,
  SLC
};

Suite suite_from_string(const std::string& name);
std::string suite_name(Suite s);

struct SuiteConfig {
  std::uint64_t seed = 2024u;
  int samples = 0;         // 0: per-suite default
  double delta_min = 0.0;  // 0: per-suite default
  double delta_max = 0.0;
  std::filesystem::path out_dir;  // empty: no files written
};

SuiteResult verify_suite(const Domain& domain, Suite suite, const SuiteConfig& config);

// CSV with a versioned schema comment and a JSON summary next to it.
struct CsvTable {
  std::string schema;              // e.g. "calibration/v1"
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(const std::vector<double>& values);
  std::string to_string(std::uint64_t seed, const std::string& extra = "") const;
  void write(const std::filesystem::path& path, std::uint64_t seed,
             const std::string& extra = "") const;
};

void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace invdist
