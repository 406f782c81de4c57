#include <algorithm>
#include <cmath>
#include <random>

#include <json.hpp>

#include "invdist/estimators.hpp"
#include "invdist/geodesics.hpp"
#include "invdist/harness.hpp"
#include "invdist/transforms.hpp"
#include "invdist/util.hpp"

namespace invdist {

namespace {

using ordered_json = nlohmann::ordered_json;

void require_ball(const Domain& domain, const char* suite) {
  if (domain.spec().family != DomainFamily::UnitBall || domain.has_premap())
    throw CapabilityError(std::string(suite) +
                          " needs the exact ball backend (unit_ball domain)");
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i)
    out[i] = lo * std::exp(std::log(hi / lo) * i / (n - 1));
  out.back() = hi;  // avoid round-off overshoot at the endpoint
  return out;
}

MatrixC random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  MatrixC m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<MatrixC> qr(m);
  MatrixC q = qr.householderQ();
  MatrixC r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

void finalize(SuiteResult& result, const SuiteConfig& config,
              const std::vector<CsvTable>& tables) {
  if (config.out_dir.empty()) return;
  std::filesystem::create_directories(config.out_dir);
  ordered_json summary;
  summary["suite"] = result.name;
  summary["pass"] = result.pass;
  summary["seed"] = config.seed;
  for (const auto& [key, value] : result.stats) summary[key] = value;
  ordered_json notes = ordered_json::array();
  for (const auto& n : result.notes) notes.push_back(n);
  summary["notes"] = notes;
  for (const auto& table : tables) {
    auto stem = table.schema.substr(0, table.schema.find('/'));
    table.write(config.out_dir / (stem + ".csv"), config.seed);
  }
  write_text_file(config.out_dir / (result.name + "_summary.json"),
                  summary.dump(2) + "\n");
}

std::vector<SampleRegime> standard_regimes(int total, double dmin, double dmax,
                                           std::uint64_t seed) {
  std::vector<SampleRegime> regimes;
  const RegimeKind kinds[] = {RegimeKind::Transversal, RegimeKind::Tangential,
                              RegimeKind::Mixed};
  for (int i = 0; i < 3; ++i) {
    SampleRegime r;
    r.kind = kinds[i];
    r.delta_min = dmin;
    r.delta_max = dmax;
    r.count = total / 3 + (i < total % 3 ? 1 : 0);
    r.seed = seed + 101 * (i + 1);
    regimes.push_back(r);
  }
  return regimes;
}

SuiteResult suite_prop2(const Domain& domain, const SuiteConfig& config) {
  require_ball(domain, "Prop2");
  SuiteResult result{.name = "prop2"};
  const int total = config.samples > 0 ? config.samples : 3000;
  const double dmin = config.delta_min > 0 ? config.delta_min : 1e-4;
  const double dmax = config.delta_max > 0 ? config.delta_max : 0.5;

  CsvTable table;
  table.schema = "prop2/v1";
  table.columns = {"pair_id", "regime", "delta_z", "delta_w", "normal_mag", "k",
                   "quotient"};

  auto run = [&](int count, std::uint64_t seed, CsvTable* csv) {
    double qmin = 1e300, qmin_tan = 1e300;
    auto regimes = standard_regimes(count, dmin, dmax, seed);
    int id = 0;
    for (const auto& regime : regimes) {
      for (const auto& [z, w] : sample_pairs(domain, regime)) {
        BoundaryFrame fz = boundary_frame(domain, z);
        BoundaryFrame fw = boundary_frame(domain, w);
        const double normal = normal_components(fz, z - w).complex_normal_mag;
        if (normal < 1e-12) continue;
        const double k = kobayashi_ball(z, w);
        const double q =
            std::expm1(k) * std::sqrt(fz.delta) * std::sqrt(fw.delta) / normal;
        qmin = std::min(qmin, q);
        if (regime.kind == RegimeKind::Tangential) qmin_tan = std::min(qmin_tan, q);
        if (csv)
          csv->add_row({static_cast<double>(id++),
                        static_cast<double>(static_cast<int>(regime.kind)), fz.delta,
                        fw.delta, normal, k, q});
      }
    }
    return std::pair{qmin, qmin_tan};
  };

  auto [qmin, qmin_tan] = run(total, config.seed, &table);
  auto [qmin2, qmin_tan2] = run(2 * total, config.seed * 2 + 1, nullptr);
  const double stability = std::abs(qmin2 - qmin) / qmin;
  result.stats["min_quotient"] = qmin;
  result.stats["min_quotient_tangential"] = qmin_tan;
  result.stats["min_quotient_2x"] = qmin2;
  result.stats["stability"] = stability;
  result.pass = qmin > 0 && qmin_tan > 0 && stability <= 0.10;
  result.notes.push_back("normal lower-bound quotient over " + std::to_string(total) +
                         " pairs incl. tangential regime");
  finalize(result, config, {table});
  return result;
}

struct GeodesicDraw {
  double theta1, theta2;
  MatrixC unitary;
};

// endpoint pairs reused across the s grid so per-draw ratios are comparable
std::vector<GeodesicDraw> geodesic_draws(int n, int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 2.0 * M_PI);
  std::vector<GeodesicDraw> draws;
  draws.reserve(n);
  for (int i = 0; i < n; ++i) {
    GeodesicDraw d;
    d.theta1 = unif(rng);
    d.theta2 = unif(rng);
    d.unitary = random_unitary(dim, rng);
    draws.push_back(std::move(d));
  }
  return draws;
}

SampledCurve draw_geodesic(const GeodesicDraw& draw, double s, int dim, int samples) {
  PointC z = PointC::Zero(dim), w = PointC::Zero(dim);
  const double r = std::sqrt(1.0 - s * s);
  z(0) = std::polar(r, draw.theta1);
  w(0) = std::polar(r, draw.theta2);
  z = draw.unitary * z;
  w = draw.unitary * w;
  return real_geodesic_ball(z, w, samples);
}

SuiteResult suite_prop3(const Domain& domain, const SuiteConfig& config) {
  require_ball(domain, "Prop3");
  SuiteResult result{.name = "prop3"};
  const int total = config.samples > 0 ? config.samples : 1000;
  const int buckets = 10;
  const int per_bucket = std::max(1, total / buckets);
  const double smin = config.delta_min > 0 ? config.delta_min : 1e-4;
  const double smax = config.delta_max > 0 ? config.delta_max : 0.5;
  auto grid = log_spaced(smin, smax, buckets);
  auto draws = geodesic_draws(per_bucket, domain.dim(), config.seed);

  CsvTable table;
  table.schema = "prop3/v1";
  table.columns = {"bucket", "s", "draw", "length", "chord", "max_delta",
                   "gehring", "prop3"};

  double gehring_max = 0.0;
  std::vector<double> bucket_stat(buckets, 0.0);
  std::vector<std::vector<double>> rows(buckets * per_bucket);
  parallel_for(rows.size(), [&](std::size_t idx) {
    const int b = static_cast<int>(idx) / per_bucket;
    const int i = static_cast<int>(idx) % per_bucket;
    SampledCurve curve = draw_geodesic(draws[i], grid[b], domain.dim(), 1025);
    LengthRatios lr = length_ratios(domain, curve);
    rows[idx] = {static_cast<double>(b), grid[b],       static_cast<double>(i),
                 lr.length,              lr.length / lr.gehring, lr.max_delta,
                 lr.gehring,             lr.prop3};
  });
  for (std::size_t idx = 0; idx < rows.size(); ++idx) {
    const int b = static_cast<int>(idx) / per_bucket;
    gehring_max = std::max(gehring_max, rows[idx][6]);
    bucket_stat[b] = std::max(bucket_stat[b], rows[idx][7]);
    table.add_row(rows[idx]);
  }
  // growth of the prop3 bound toward the boundary (bucket 0 is s_min)
  double other_max = 0.0;
  for (int b = 1; b < buckets; ++b) other_max = std::max(other_max, bucket_stat[b]);
  const double drift = std::max(0.0, bucket_stat[0] / other_max - 1.0);
  result.stats["gehring_max"] = gehring_max;
  result.stats["prop3_bound"] = *std::max_element(bucket_stat.begin(), bucket_stat.end());
  result.stats["prop3_smallest_s"] = bucket_stat[0];
  result.stats["boundary_growth"] = drift;
  result.pass = gehring_max <= 1.58 + 1e-2 && drift <= 0.10;
  result.notes.push_back("length vs chord and max-delta over " +
                         std::to_string(rows.size()) + " exact geodesics");
  finalize(result, config, {table});
  return result;
}

struct SliceDraw {
  PointC q;
  VectorC u;
};

std::vector<SliceDraw> slice_draws(int n, int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto rand_dir = [&]() {
    VectorC v(dim);
    for (int j = 0; j < dim; ++j) v(j) = Complex(gauss(rng), gauss(rng));
    return VectorC(v / v.norm());
  };
  std::vector<SliceDraw> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    SliceDraw d;
    d.q = rand_dir();
    VectorC u = rand_dir();
    u -= inner(u, d.q) * d.q;
    if (u.norm() < 1e-6) { --i; continue; }
    d.u = u / u.norm();
    out.push_back(std::move(d));
  }
  return out;
}

SuiteResult suite_prop4(const Domain& domain, const SuiteConfig& config) {
  require_ball(domain, "Prop4");
  SuiteResult result{.name = "prop4"};
  const int total = config.samples > 0 ? config.samples : 200;
  const double smin = config.delta_min > 0 ? config.delta_min : 1e-4;
  const double smax = config.delta_max > 0 ? config.delta_max : 1.0;

  CsvTable table;
  table.schema = "prop4/v1";
  table.columns = {"slice", "s", "diameter", "max_delta", "max_derivative",
                   "de_over_sqrtD", "dphi_over_de", "tangency_defect"};

  auto band = [&](int count, std::uint64_t seed, CsvTable* csv) {
    auto grid = log_spaced(smin, smax, count);
    auto draws = slice_draws(count, domain.dim(), seed);
    std::vector<DiscInvariants> inv(count);
    parallel_for(count, [&](std::size_t i) {
      DiscMap disc = ball_slice(grid[i], draws[i].q, draws[i].u);
      inv[i] = disc_invariants(domain, disc, 256);
    });
    double r1_min = 1e300, r1_max = 0.0, r2_min = 1e300, r2_max = 0.0;
    for (int i = 0; i < count; ++i) {
      const double r1 = inv[i].diameter / std::sqrt(inv[i].max_delta);
      const double r2 = inv[i].max_derivative / inv[i].diameter;
      r1_min = std::min(r1_min, r1);
      r1_max = std::max(r1_max, r1);
      r2_min = std::min(r2_min, r2);
      r2_max = std::max(r2_max, r2);
      if (csv)
        csv->add_row({static_cast<double>(i), grid[i], inv[i].diameter,
                      inv[i].max_delta, inv[i].max_derivative, r1, r2,
                      inv[i].tangency_defect});
    }
    return std::array{r1_min, r1_max, r2_min, r2_max};
  };

  auto b1 = band(total, config.seed, &table);
  auto b2 = band(2 * total, config.seed * 2 + 1, nullptr);
  const double band1 = b1[1] / b1[0];
  const double band2 = b1[3] / b1[2];
  double stability = 0.0;
  for (int j = 0; j < 4; ++j)
    stability = std::max(stability, std::abs(b2[j] - b1[j]) / b1[j]);
  result.stats["de_over_sqrtD_min"] = b1[0];
  result.stats["de_over_sqrtD_max"] = b1[1];
  result.stats["dphi_over_de_min"] = b1[2];
  result.stats["dphi_over_de_max"] = b1[3];
  result.stats["band_de"] = band1;
  result.stats["band_dphi"] = band2;
  result.stats["stability"] = stability;
  result.pass = band1 <= 10.0 && band2 <= 10.0 && stability <= 0.10;
  finalize(result, config, {table});
  return result;
}

SuiteResult suite_thm5(const Domain& domain, const SuiteConfig& config) {
  require_ball(domain, "Thm5");
  SuiteResult result{.name = "thm5"};
  const int slices = config.samples > 0 ? config.samples : 200;
  const int pairs_per_slice = 5;
  const double smin = config.delta_min > 0 ? config.delta_min : 1e-4;
  const double smax = config.delta_max > 0 ? config.delta_max : 1.0;

  CsvTable table;
  table.schema = "thm5/v1";
  table.columns = {"slice", "s", "pair", "dist", "delta_z", "balance_ratio"};

  auto band = [&](int count, std::uint64_t seed, CsvTable* csv) {
    auto grid = log_spaced(smin, smax, count);
    auto draws = slice_draws(count, domain.dim(), seed);
    std::mt19937_64 rng(seed ^ 0x5eedu);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double rmin = 1e300, rmax = 0.0;
    for (int i = 0; i < count; ++i) {
      DiscMap disc = ball_slice(grid[i], draws[i].q, draws[i].u);
      const double de = 2.0 * std::abs(disc.a);
      for (int p = 0; p < pairs_per_slice; ++p) {
        const Complex zeta_z =
            std::polar(0.999 * std::sqrt(unif(rng)), 2 * M_PI * unif(rng));
        const Complex zeta_w =
            std::polar(0.999 * std::sqrt(unif(rng)), 2 * M_PI * unif(rng));
        const PointC z = disc.at(zeta_z), w = disc.at(zeta_w);
        const double dist = (z - w).norm();
        if (dist < 1e-9) continue;
        BoundaryFrame fz = boundary_frame(domain, z);
        const double normal = normal_components(fz, z - w).complex_normal_mag;
        const double ratio = (normal / dist + std::sqrt(fz.delta) + dist) / de;
        rmin = std::min(rmin, ratio);
        rmax = std::max(rmax, ratio);
        if (csv)
          csv->add_row({static_cast<double>(i), grid[i], static_cast<double>(p),
                        dist, fz.delta, ratio});
      }
    }
    return std::pair{rmin, rmax};
  };

  auto [rmin, rmax] = band(slices, config.seed, &table);
  auto [rmin2, rmax2] = band(2 * slices, config.seed * 2 + 1, nullptr);
  const double band_width = rmax / rmin;
  const double stability = std::max(std::abs(rmin2 - rmin) / rmin,
                                    std::abs(rmax2 - rmax) / rmax);
  result.stats["balance_min"] = rmin;
  result.stats["balance_max"] = rmax;
  result.stats["band"] = band_width;
  result.stats["stability"] = stability;
  result.pass = band_width <= 10.0 && stability <= 0.10;
  finalize(result, config, {table});
  return result;
}

SuiteResult suite_balogh_bonk(const Domain& domain, const SuiteConfig& config) {
  require_ball(domain, "BaloghBonk");
  SuiteResult result{.name = "balogh_bonk"};
  const int total = config.samples > 0 ? config.samples : 10000;

  CsvTable table;
  table.schema = "balogh_bonk/v1";
  table.columns = {"pair_id", "delta_min_set", "delta_z", "delta_w", "k", "g",
                   "abs_gap"};

  auto sup_gap = [&](double dmin, int tag, CsvTable* csv) {
    auto regimes = standard_regimes(total, dmin, 0.5, config.seed + tag);
    double sup = 0.0;
    int id = 0;
    for (const auto& regime : regimes) {
      auto pairs = sample_pairs(domain, regime);
      std::vector<double> gaps(pairs.size(), 0.0);
      std::vector<std::array<double, 4>> data(pairs.size());
      parallel_for(pairs.size(), [&](std::size_t i) {
        const auto& [z, w] = pairs[i];
        const double k = kobayashi_ball(z, w);
        const double g = g_balogh_bonk(domain, z, w);
        BoundaryFrame fz = boundary_frame(domain, z);
        BoundaryFrame fw = boundary_frame(domain, w);
        gaps[i] = std::abs(k - g);
        data[i] = {fz.delta, fw.delta, k, g};
      });
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        sup = std::max(sup, gaps[i]);
        if (csv)
          csv->add_row({static_cast<double>(id++), dmin, data[i][0], data[i][1],
                        data[i][2], data[i][3], gaps[i]});
      }
    }
    return sup;
  };

  const double sup_coarse = sup_gap(1e-3, 0, &table);
  const double sup_fine = sup_gap(1e-4, 7, nullptr);
  result.stats["sup_gap_delta_1e3"] = sup_coarse;
  result.stats["sup_gap_delta_1e4"] = sup_fine;
  result.stats["increase"] = sup_fine / sup_coarse - 1.0;
  result.pass = std::isfinite(sup_fine) && sup_fine <= 1.10 * sup_coarse;
  finalize(result, config, {table});
  return result;
}

SuiteResult suite_symmetry(const Domain& domain, const SuiteConfig& config) {
  SuiteResult result{.name = "symmetry"};
  const int total = config.samples > 0 ? config.samples : 10000;
  const double dmin = config.delta_min > 0 ? config.delta_min : 1e-4;
  const double dmax = config.delta_max > 0 ? config.delta_max : 0.5;

  CsvTable table;
  table.schema = "symmetry/v1";
  table.columns = {"pair_id", "delta_z", "delta_w", "A_zw", "A_wz", "ratio"};

  auto worst_ratio = [&](int count, std::uint64_t seed, CsvTable* csv) {
    auto regimes = standard_regimes(count, dmin, dmax, seed);
    double worst = 0.0;
    int id = 0;
    for (const auto& regime : regimes) {
      auto pairs = sample_pairs(domain, regime);
      std::vector<std::array<double, 5>> data(pairs.size());
      parallel_for(pairs.size(), [&](std::size_t i) {
        const auto& [z, w] = pairs[i];
        const double a_zw = a_quantity(domain, z, w);
        const double a_wz = a_quantity(domain, w, z);
        BoundaryFrame fz = boundary_frame(domain, z);
        BoundaryFrame fw = boundary_frame(domain, w);
        data[i] = {fz.delta, fw.delta, a_zw, a_wz,
                   std::max(a_zw / a_wz, a_wz / a_zw)};
      });
      for (auto& row : data) {
        worst = std::max(worst, row[4]);
        if (csv)
          csv->add_row({static_cast<double>(id++), row[0], row[1], row[2], row[3],
                        row[4]});
      }
    }
    return worst;
  };

  const double worst = worst_ratio(total, config.seed, &table);
  const double worst2 = worst_ratio(2 * total, config.seed * 2 + 1, nullptr);
  const double stability = std::abs(worst2 - worst) / worst;
  result.stats["max_asymmetry"] = worst;
  result.stats["max_asymmetry_2x"] = worst2;
  result.stats["stability"] = stability;
  result.pass = std::isfinite(worst) && stability <= 0.10;
  finalize(result, config, {table});
  return result;
}

SuiteResult suite_gehring_hayman(const Domain& domain, const SuiteConfig& config) {
  require_ball(domain, "GehringHayman");
  SuiteResult result{.name = "gehring_hayman"};
  const int total = config.samples > 0 ? config.samples : 300;
  const double smin = config.delta_min > 0 ? config.delta_min : 1e-4;
  const double smax = config.delta_max > 0 ? config.delta_max : 0.5;
  auto grid = log_spaced(smin, smax, 6);
  auto draws = geodesic_draws(total / 6 + 1, domain.dim(), config.seed);

  CsvTable table;
  table.schema = "gehring_hayman/v1";
  table.columns = {"s", "draw", "length", "chord", "gehring"};

  double worst = 0.0;
  for (std::size_t b = 0; b < grid.size(); ++b) {
    for (std::size_t i = 0; i < draws.size(); ++i) {
      SampledCurve curve = draw_geodesic(draws[i], grid[b], domain.dim(), 1025);
      LengthRatios lr = length_ratios(domain, curve);
      worst = std::max(worst, lr.gehring);
      table.add_row({grid[b], static_cast<double>(i), lr.length,
                     lr.length / lr.gehring, lr.gehring});
    }
  }
  result.stats["gehring_max"] = worst;
  result.pass = worst <= M_PI / 2 + 0.01;
  finalize(result, config, {table});
  return result;
}

SuiteResult suite_s9(const SuiteConfig& config) {
  SuiteResult result{.name = "s9_example"};
  const int levels = config.samples > 0 ? config.samples : 4;
  auto rows = s9_counterexample(levels);

  CsvTable table;
  table.schema = "s9_example/v1";
  table.columns = {"level", "eps", "h", "dist2", "ratio"};
  bool decreasing = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    table.add_row({static_cast<double>(i), rows[i].eps, rows[i].h, rows[i].dist2,
                   rows[i].ratio});
    if (i > 0 && !(rows[i].ratio * 2.0 <= rows[i - 1].ratio)) decreasing = false;
  }
  result.stats["first_ratio"] = rows.front().ratio;
  result.stats["last_ratio"] = rows.back().ratio;
  result.stats["levels"] = static_cast<double>(levels);
  result.pass = decreasing;
  result.notes.push_back("h/|z-w|^2 must at least halve per level");
  finalize(result, config, {table});
  return result;
}

SuiteResult suite_slc(const Domain& domain, const SuiteConfig& config) {
  SuiteResult result{.name = "slc"};
  CsvTable table;
  table.schema = "slc/v1";
  table.columns = {"radius", "c2", "c3", "c4", "samples"};

  PointC p;
  std::vector<double> radii;
  switch (domain.spec().family) {
    case DomainFamily::UnitBall: {
      p = PointC::Zero(domain.dim());
      p(0) = 1.0;
      radii = {0.4, 0.2, 0.1, 0.05};
      break;
    }
    case DomainFamily::Ellipsoid: {
      p = PointC::Zero(domain.dim());
      const int last = domain.dim() - 1;
      p(last) = 1.0 / std::sqrt(domain.spec().coeffs[last]);
      radii = {0.2, 0.1, 0.05, 0.025};
      break;
    }
    case DomainFamily::LocalModelS9: {
      p = PointC::Zero(2);
      radii = {0.02, 0.01, 0.005, 0.0025};
      break;
    }
    default:
      throw CapabilityError("slc suite supports ball, ellipsoid, local model");
  }
  auto rows = slc_ratio_scan(domain, p, radii, config.seed);
  for (const auto& row : rows)
    table.add_row({row.radius, row.c2, row.c3, row.c4,
                   static_cast<double>(row.samples)});

  bool c2_le_c3 = true;
  for (const auto& row : rows) c2_le_c3 = c2_le_c3 && row.c2 <= row.c3 + 1e-12;
  result.stats["c3_final"] = rows.back().c3;
  result.stats["c4_first"] = rows.front().c4;
  result.stats["c4_final"] = rows.back().c4;

  if (domain.spec().family == DomainFamily::LocalModelS9) {
    result.pass = rows.back().c4 <= 0.1 * rows.front().c4 && c2_le_c3;
    result.notes.push_back("degenerate direction: c4 must collapse");
  } else {
    const double lambda = slc_lambda(domain, p);
    SlcLambda detail = slc_lambda_detail(domain, p);
    result.stats["lambda"] = lambda;
    result.stats["lambda_full_hessian"] = detail.full_hessian;
    const double rel = std::abs(rows.back().c3 - lambda) / lambda;
    const double rel_full =
        std::abs(rows.back().c3 - detail.full_hessian) / detail.full_hessian;
    result.stats["c3_vs_lambda"] = rel;
    result.stats["c3_vs_lambda_full"] = rel_full;
    result.pass = rel <= 0.10 && c2_le_c3;
    result.notes.push_back(
        rel <= rel_full
            ? "half-Hessian (Taylor) normalization matches the c3 limit"
            : "full-Hessian normalization matches the c3 limit");
  }
  finalize(result, config, {table});
  return result;
}

}  // namespace

Suite suite_from_string(const std::string& name) {
  if (name == "Prop2" || name == "prop2") return Suite::Prop2;
  if (name == "Prop3" || name == "prop3") return Suite::Prop3;
  if (name == "Prop4" || name == "prop4") return Suite::Prop4;
  if (name == "Thm5" || name == "thm5") return Suite::Thm5;
  if (name == "BaloghBonk" || name == "balogh_bonk") return Suite::BaloghBonk;
  if (name == "Symmetry" || name == "symmetry") return Suite::Symmetry;
  if (name == "GehringHayman" || name == "gehring_hayman") return Suite::GehringHayman;
  if (name == "S9Example" || name == "s9_example") return Suite::S9Example;
  if (name == "SLC" || name == "slc") return Suite::SLC;
  throw ConfigError("unknown suite '" + name + "'");
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Prop2: return "Prop2";
    case Suite::Prop3: return "Prop3";
    case Suite::Prop4: return "Prop4";
    case Suite::Thm5: return "Thm5";
    case Suite::BaloghBonk: return "BaloghBonk";
    case Suite::Symmetry: return "Symmetry";
    case Suite::GehringHayman: return "GehringHayman";
    case Suite::S9Example: return "S9Example";
    case Suite::SLC: return "SLC";
  }
  return "unknown";
}

SuiteResult verify_suite(const Domain& domain, Suite suite, const SuiteConfig& config) {
  switch (suite) {
    case Suite::Prop2: return suite_prop2(domain, config);
    case Suite::Prop3: return suite_prop3(domain, config);
    case Suite::Prop4: return suite_prop4(domain, config);
    case Suite::Thm5: return suite_thm5(domain, config);
    case Suite::BaloghBonk: return suite_balogh_bonk(domain, config);
    case Suite::Symmetry: return suite_symmetry(domain, config);
    case Suite::GehringHayman: return suite_gehring_hayman(domain, config);
    case Suite::S9Example: return suite_s9(config);
    case Suite::SLC: return suite_slc(domain, config);
  }
  throw ConfigError("unhandled suite");
}

}  // namespace invdist
