#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "invdist/estimators.hpp"
#include "invdist/harness.hpp"
#include "invdist/transforms.hpp"
#include "invdist/util.hpp"

using namespace invdist;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitNumericError = 3;

struct CommonOpts {
  std::string config_path;
  std::uint64_t seed = 2024;
  int samples = 0;
  double delta_min = 0.0;
  double delta_max = 0.0;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_config = true) {
  if (with_config)
    cmd->add_option("config", opts.config_path, "domain config file")->required();
  cmd->add_option("--seed", opts.seed, "RNG seed");
  cmd->add_option("--samples", opts.samples, "sample count override");
  cmd->add_option("--delta-min", opts.delta_min, "lower boundary-distance cut");
  cmd->add_option("--delta-max", opts.delta_max, "upper boundary-distance cut");
  cmd->add_option("--format", opts.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
}

void emit(const CommonOpts& opts, const CsvTable& table, const ordered_json& summary) {
  if (opts.format == "json") {
    std::cout << summary.dump(2) << "\n";
  } else {
    std::cout << table.to_string(opts.seed);
  }
}

ordered_json point_json(const PointC& z) {
  ordered_json j = ordered_json::array();
  for (Eigen::Index i = 0; i < z.size(); ++i)
    j.push_back({z(i).real(), z(i).imag()});
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{
      "invdist: boundary-geometry estimators and certified bounds for "
      "invariant distances on model domains"};
  app.require_subcommand(1);

  CommonOpts frame_opts, dist_opts, royden_opts, est_opts, cal_opts, ver_opts,
      s9_opts;

  // frame
  auto* cmd_frame = app.add_subcommand("frame", "boundary frame at a point");
  std::string frame_point;
  add_common(cmd_frame, frame_opts);
  cmd_frame->add_option("--point", frame_point, "point as re:im,re:im,...")
      ->required();

  // dist
  auto* cmd_dist = app.add_subcommand("dist", "distance bracket between two points");
  std::string dist_z, dist_w, dist_backend = "interval";
  int dist_segments = 32;
  add_common(cmd_dist, dist_opts);
  cmd_dist->add_option("--z", dist_z)->required();
  cmd_dist->add_option("--w", dist_w)->required();
  cmd_dist->add_option("--backend", dist_backend, "exact-ball|interval");
  cmd_dist->add_option("--segments", dist_segments, "path optimizer segments");

  // royden
  auto* cmd_royden = app.add_subcommand("royden", "infinitesimal metric bracket");
  std::string royden_point, royden_vector, royden_backend = "interval";
  add_common(cmd_royden, royden_opts);
  cmd_royden->add_option("--point", royden_point)->required();
  cmd_royden->add_option("--vector", royden_vector)->required();
  cmd_royden->add_option("--backend", royden_backend, "exact-ball|interval");

  // estimate
  auto* cmd_est = app.add_subcommand("estimate", "pair quantities A|g|h|cc");
  std::string est_quantity, est_z, est_w;
  add_common(cmd_est, est_opts);
  cmd_est->add_option("--quantity", est_quantity, "A|g|h|cc")->required();
  cmd_est->add_option("--z", est_z)->required();
  cmd_est->add_option("--w", est_w)->required();

  // calibrate
  auto* cmd_cal = app.add_subcommand("calibrate", "empirical sandwich constants");
  std::string cal_regimes = "transversal,tangential,mixed";
  std::string cal_backend = "exact-ball", cal_distance = "kobayashi", cal_out;
  add_common(cmd_cal, cal_opts);
  cmd_cal->add_option("--regimes", cal_regimes, "comma list of regimes");
  cmd_cal->add_option("--backend", cal_backend, "exact-ball|interval");
  cmd_cal->add_option("--distance", cal_distance, "kobayashi|bergman");
  cmd_cal->add_option("--out", cal_out, "output directory")->required();

  // verify
  auto* cmd_ver = app.add_subcommand("verify", "run a verification suite");
  std::string ver_suite, ver_out;
  add_common(cmd_ver, ver_opts);
  cmd_ver->add_option("--suite", ver_suite,
                      "Prop2|Prop3|Prop4|Thm5|BaloghBonk|Symmetry|"
                      "GehringHayman|S9Example|SLC")
      ->required();
  cmd_ver->add_option("--out", ver_out, "output directory");

  // example-s9
  auto* cmd_s9 = app.add_subcommand("example-s9", "local model counterexample scan");
  int s9_levels = 4;
  double s9_eps0 = 0.1;
  std::string s9_out;
  add_common(cmd_s9, s9_opts, false);
  cmd_s9->add_option("--levels", s9_levels, "number of halving levels");
  cmd_s9->add_option("--eps0", s9_eps0, "starting tangential offset");
  cmd_s9->add_option("--out", s9_out, "output directory");

  CLI11_PARSE(app, argc, argv);

  if (cmd_frame->parsed()) {
    Domain dom = domain_from_config_file(frame_opts.config_path);
    BoundaryFrame f = boundary_frame(dom, parse_complex_tuple(frame_point));
    CsvTable table;
    table.schema = "frame/v1";
    table.columns = {"delta", "levi_min", "unique", "projection", "outer_normal"};
    table.rows.push_back({fmt_g17(f.delta), fmt_g17(f.levi_min),
                          f.unique_projection ? "1" : "0",
                          "\"" + format_complex_tuple(f.projection) + "\"",
                          "\"" + format_complex_tuple(f.outer_normal) + "\""});
    ordered_json j;
    j["delta"] = f.delta;
    j["projection"] = point_json(f.projection);
    j["outer_normal"] = point_json(f.outer_normal);
    j["levi_min"] = f.levi_min;
    j["unique_projection"] = f.unique_projection;
    emit(frame_opts, table, j);
    return kExitPass;
  }

  if (cmd_dist->parsed()) {
    Domain dom = domain_from_config_file(dist_opts.config_path);
    const PointC z = parse_complex_tuple(dist_z), w = parse_complex_tuple(dist_w);
    const Backend backend = backend_from_string(dist_backend);
    IntervalValue iv = kobayashi_interval(dom, z, w, backend, dist_segments);
    auto lb = kobayashi_lower(dom, z, w);
    const double dini = dini_upper_estimator(dom, z, w, 1.0);
    CsvTable table;
    table.schema = "dist/v1";
    table.columns = {"lower", "upper", "nt_product_estimator",
                     "normal_form_estimator", "dini_estimator_C1"};
    table.add_row({iv.lower, iv.upper, lb.nt_product, lb.normal_form, dini});
    ordered_json j;
    j["backend"] = backend_name(backend);
    j["lower"] = iv.lower;
    j["upper"] = iv.upper;
    j["estimators"] = {{"nt_product", lb.nt_product},
                       {"normal_form", lb.normal_form},
                       {"dini_C1", dini}};
    j["estimators_certified"] = false;
    emit(dist_opts, table, j);
    return kExitPass;
  }

  if (cmd_royden->parsed()) {
    Domain dom = domain_from_config_file(royden_opts.config_path);
    const PointC z = parse_complex_tuple(royden_point);
    const VectorC v = parse_complex_tuple(royden_vector);
    const Backend backend = backend_from_string(royden_backend);
    IntervalValue iv;
    if (backend == Backend::ExactBall) {
      const double exact = royden_ball(z, v);
      iv = {exact, exact};
    } else {
      iv = royden_interval(dom, z, v);
    }
    const double ma = ma_estimator(dom, z, v);
    CsvTable table;
    table.schema = "royden/v1";
    table.columns = {"lower", "upper", "ma_estimator"};
    table.add_row({iv.lower, iv.upper, ma});
    ordered_json j;
    j["backend"] = backend_name(backend);
    j["lower"] = iv.lower;
    j["upper"] = iv.upper;
    j["ma_estimator"] = ma;
    emit(royden_opts, table, j);
    return kExitPass;
  }

  if (cmd_est->parsed()) {
    Domain dom = domain_from_config_file(est_opts.config_path);
    const PointC z = parse_complex_tuple(est_z), w = parse_complex_tuple(est_w);
    CsvTable table;
    ordered_json j;
    if (est_quantity == "A") {
      const double a = a_quantity(dom, z, w);
      table.schema = "estimate_A/v1";
      table.columns = {"A"};
      table.add_row({a});
      j["A"] = a;
    } else if (est_quantity == "g") {
      const double g = g_balogh_bonk(dom, z, w);
      table.schema = "estimate_g/v1";
      table.columns = {"g"};
      table.add_row({g});
      j["g"] = g;
    } else if (est_quantity == "h") {
      auto [h, hr] = h_quantities(dom, z, w);
      table.schema = "estimate_h/v1";
      table.columns = {"h", "h_real"};
      table.add_row({h, hr});
      j["h"] = h;
      j["h_real"] = hr;
    } else if (est_quantity == "cc") {
      const double cc = cc_proxy(dom, z, w);
      table.schema = "estimate_cc/v1";
      table.columns = {"cc_proxy"};
      table.add_row({cc});
      j["cc_proxy"] = cc;
    } else {
      throw ConfigError("unknown quantity '" + est_quantity + "'");
    }
    emit(est_opts, table, j);
    return kExitPass;
  }

  if (cmd_cal->parsed()) {
    Domain dom = domain_from_config_file(cal_opts.config_path);
    const Backend backend = backend_from_string(cal_backend);
    DistanceKind kind;
    if (cal_distance == "kobayashi") kind = DistanceKind::Kobayashi;
    else if (cal_distance == "bergman") kind = DistanceKind::Bergman;
    else throw ConfigError("unknown distance '" + cal_distance + "'");

    std::vector<SampleRegime> regimes;
    std::stringstream ss(cal_regimes);
    std::string name;
    int idx = 0;
    const int total = cal_opts.samples > 0 ? cal_opts.samples : 3000;
    std::vector<std::string> names;
    while (std::getline(ss, name, ',')) names.push_back(name);
    for (const auto& n : names) {
      SampleRegime r;
      r.kind = regime_from_string(n);
      r.delta_min = cal_opts.delta_min > 0 ? cal_opts.delta_min : 1e-4;
      r.delta_max = cal_opts.delta_max > 0 ? cal_opts.delta_max : 0.5;
      r.count = total / static_cast<int>(names.size());
      r.seed = cal_opts.seed + 101 * (++idx);
      regimes.push_back(r);
    }
    auto report = calibrate_theorem1(dom, backend, regimes, kind);

    CsvTable table;
    table.schema = "calibration/v1";
    table.columns = {"pair_id", "regime", "z", "w", "delta_z", "delta_w",
                     "A", "k_lower", "k_upper", "ratio_low", "ratio_high"};
    for (const auto& row : report.rows)
      table.rows.push_back({std::to_string(row.pair_id), regime_name(row.regime),
                            "\"" + format_complex_tuple(row.z) + "\"",
                            "\"" + format_complex_tuple(row.w) + "\"",
                            fmt_g17(row.delta_z), fmt_g17(row.delta_w), fmt_g17(row.A),
                            fmt_g17(row.k_lower), fmt_g17(row.k_upper),
                            fmt_g17(row.ratio_low), fmt_g17(row.ratio_high)});
    const auto out_dir = std::filesystem::path(cal_out);
    table.write(out_dir / "calibration.csv", cal_opts.seed,
                "backend=" + backend_name(backend) + "; distance=" + cal_distance);
    ordered_json j;
    j["c_emp"] = report.c_emp;
    j["C_emp"] = report.C_emp;
    j["c_emp_2x"] = report.c_emp_2x;
    j["C_emp_2x"] = report.C_emp_2x;
    j["stability_c"] = report.stability_c;
    j["stability_C"] = report.stability_C;
    j["excluded_pairs"] = report.excluded_pairs;
    j["pairs"] = report.rows.size();
    j["backend"] = backend_name(backend);
    j["distance"] = cal_distance;
    write_text_file(out_dir / "calibration_summary.json", j.dump(2) + "\n");
    std::cout << j.dump(2) << "\n";
    const bool ok = report.c_emp > 0 && report.c_emp < report.C_emp &&
                    report.stability_c <= 0.10 && report.stability_C <= 0.10;
    return ok ? kExitPass : kExitSuiteFailure;
  }

  if (cmd_ver->parsed()) {
    Domain dom = domain_from_config_file(ver_opts.config_path);
    SuiteConfig config;
    config.seed = ver_opts.seed;
    config.samples = ver_opts.samples;
    config.delta_min = ver_opts.delta_min;
    config.delta_max = ver_opts.delta_max;
    if (!ver_out.empty()) config.out_dir = ver_out;
    SuiteResult result = verify_suite(dom, suite_from_string(ver_suite), config);
    ordered_json j;
    j["suite"] = result.name;
    j["pass"] = result.pass;
    for (const auto& [k, v] : result.stats) j[k] = v;
    std::cout << j.dump(2) << "\n";
    return result.pass ? kExitPass : kExitSuiteFailure;
  }

  if (cmd_s9->parsed()) {
    auto rows = s9_counterexample(s9_levels, s9_eps0);
    CsvTable table;
    table.schema = "s9_example/v1";
    table.columns = {"level", "eps", "h", "dist2", "ratio"};
    for (std::size_t i = 0; i < rows.size(); ++i)
      table.add_row({static_cast<double>(i), rows[i].eps, rows[i].h, rows[i].dist2,
                     rows[i].ratio});
    ordered_json j;
    j["levels"] = s9_levels;
    j["first_ratio"] = rows.front().ratio;
    j["last_ratio"] = rows.back().ratio;
    bool decreasing = true;
    for (std::size_t i = 1; i < rows.size(); ++i)
      decreasing = decreasing && rows[i].ratio * 2.0 <= rows[i - 1].ratio;
    j["halves_per_level"] = decreasing;
    if (!s9_out.empty()) {
      table.write(std::filesystem::path(s9_out) / "s9_example.csv", s9_opts.seed);
      write_text_file(std::filesystem::path(s9_out) / "s9_summary.json",
                      j.dump(2) + "\n");
    }
    if (s9_opts.format == "json") std::cout << j.dump(2) << "\n";
    else std::cout << table.to_string(s9_opts.seed);
    return decreasing ? kExitPass : kExitSuiteFailure;
  }

  return kExitConfigError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const SamplingError& e) {
    std::cerr << "sampling error: " << e.what() << "\n";
    return kExitNumericError;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << " (residual " << e.residual
              << ")\n";
    return kExitNumericError;
  } catch (const RegionError& e) {
    std::cerr << "region error: " << e.what() << "\n";
    return kExitNumericError;
  } catch (const GeometryError& e) {
    std::cerr << "geometry error: " << e.what() << "\n";
    return kExitNumericError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericError;
  }
}
