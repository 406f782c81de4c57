#include <fstream>
#include <random>

#include "invdist/harness.hpp"
#include "invdist/util.hpp"

namespace invdist {

RegimeKind regime_from_string(const std::string& name) {
  if (name == "transversal") return RegimeKind::Transversal;
  if (name == "tangential") return RegimeKind::Tangential;
  if (name == "mixed") return RegimeKind::Mixed;
  if (name == "interior") return RegimeKind::Interior;
  throw ConfigError("unknown regime '" + name + "'");
}

std::string regime_name(RegimeKind k) {
  switch (k) {
    case RegimeKind::Transversal: return "transversal";
    case RegimeKind::Tangential: return "tangential";
    case RegimeKind::Mixed: return "mixed";
    case RegimeKind::Interior: return "interior";
  }
  return "unknown";
}

namespace {

constexpr int kRejectionCap = 1000000;

struct PairSampler {
  const Domain& domain;
  std::mt19937_64 rng;
  std::normal_distribution<double> gauss{0.0, 1.0};
  std::uniform_real_distribution<double> unif{0.0, 1.0};
  int draws = 0;

  explicit PairSampler(const Domain& d, std::uint64_t seed) : domain(d), rng(seed) {}

  void count_draw(const char* constraint) {
    if (++draws > kRejectionCap)
      throw SamplingError(std::string("rejection cap exceeded while enforcing ") +
                          constraint);
  }

  VectorC random_direction() {
    VectorC u(domain.dim());
    for (Eigen::Index j = 0; j < u.size(); ++j) u(j) = Complex(gauss(rng), gauss(rng));
    double n = u.norm();
    return n > 1e-12 ? VectorC(u / n) : random_direction();
  }

  double log_uniform(double lo, double hi) {
    return lo * std::exp(unif(rng) * std::log(hi / lo));
  }

  // interior point with delta approximately log-uniform in range
  std::pair<PointC, BoundaryFrame> interior_point(double dmin, double dmax) {
    for (;;) {
      count_draw("delta range");
      const double target = log_uniform(dmin, dmax);
      PointC p;
      if (domain.spec().family == DomainFamily::LocalModelS9) {
        const double r = 0.4 * domain.spec().working_radius;
        PointC b(2);
        const double y1 = (2 * unif(rng) - 1) * r, x2 = (2 * unif(rng) - 1) * r,
                     y2 = (2 * unif(rng) - 1) * r;
        b << Complex(-2.0 * y2 * y2, y1), Complex(x2, y2);
        DefiningValue dv = domain.defining_value(b);
        p = b - target * (dv.gradient / dv.gradient.norm());
      } else {
        auto bpts = domain.boundary_sample(1, rng());
        DefiningValue dv = domain.defining_value(bpts[0]);
        p = bpts[0] - target * (dv.gradient / dv.gradient.norm());
      }
      if (!domain.contains(p) || !domain.in_working_region(p)) continue;
      BoundaryFrame f = boundary_frame(domain, p);
      if (f.delta < dmin || f.delta > dmax) continue;
      return {p, f};
    }
  }

  // unit vector of the complex tangent space at the frame's projection
  VectorC tangent_direction(const BoundaryFrame& f) {
    for (;;) {
      VectorC u = random_direction();
      VectorC t = u - inner(u, f.outer_normal) * f.outer_normal;
      if (t.norm() > 1e-8) return t / t.norm();
    }
  }
};

}  // namespace

std::vector<PointC> sample_points(const Domain& domain, double delta_min,
                                  double delta_max, int count, std::uint64_t seed) {
  PairSampler sampler(domain, seed);
  std::vector<PointC> out;
  out.reserve(count);
  while (static_cast<int>(out.size()) < count)
    out.push_back(sampler.interior_point(delta_min, delta_max).first);
  return out;
}

std::vector<std::pair<PointC, PointC>> sample_pairs(const Domain& domain,
                                                    const SampleRegime& regime) {
  if (regime.count < 1) throw ConfigError("regime count must be >= 1");
  if (regime.delta_min < kDeltaFloor)
    throw ConfigError("regime delta_min below the delta floor");
  PairSampler sampler(domain, regime.seed);
  std::vector<std::pair<PointC, PointC>> out;
  out.reserve(regime.count);

  const double scale = domain.spec().family == DomainFamily::LocalModelS9
                           ? domain.spec().working_radius
                           : 1.0;
  while (static_cast<int>(out.size()) < regime.count) {
    auto [z, fz] = sampler.interior_point(regime.delta_min, regime.delta_max);
    PointC w;
    switch (regime.kind) {
      case RegimeKind::Interior:
      case RegimeKind::Mixed: {
        w = sampler.interior_point(regime.delta_min, regime.delta_max).first;
        break;
      }
      case RegimeKind::Tangential: {
        sampler.count_draw("tangential normal share <= 0.05");
        const VectorC t = sampler.tangent_direction(fz);
        const double step =
            sampler.log_uniform(std::max(1e-7, fz.delta * 0.05), 0.5 * scale);
        PointC w0 = z + step * t;
        if (!domain.contains(w0) || !domain.in_working_region(w0)) continue;
        // restore a nearby delta without disturbing the tangential offset;
        // the curvature of the boundary shifts delta by ~step^2/2
        BoundaryFrame f0 = boundary_frame(domain, w0);
        const double center = std::max(regime.delta_min, fz.delta - 0.5 * step * step);
        const double dtarget =
            std::clamp(center + (2.0 * sampler.unif(sampler.rng) - 1.0) * 0.04 * step,
                       regime.delta_min, regime.delta_max);
        w = f0.projection - dtarget * f0.outer_normal;
        break;
      }
      case RegimeKind::Transversal: {
        sampler.count_draw("transversal normal share >= 0.5");
        const VectorC t = sampler.tangent_direction(fz);
        const double theta = sampler.unif(sampler.rng) * 1.0;  // cos >= 0.54
        const Complex phase =
            std::polar(1.0, 2.0 * M_PI * sampler.unif(sampler.rng));
        const VectorC dir =
            std::cos(theta) * phase * fz.outer_normal + std::sin(theta) * t;
        const double span = std::min(0.5 * scale, 4.0 * fz.delta);
        const double step = sampler.log_uniform(std::max(1e-7, fz.delta * 0.05), span);
        w = z - step * dir;
        break;
      }
    }
    if (w.size() == 0 || !domain.contains(w) || !domain.in_working_region(w)) continue;
    BoundaryFrame fw = boundary_frame(domain, w);
    if (fw.delta < regime.delta_min || fw.delta > regime.delta_max) continue;
    const double dist = (z - w).norm();
    if (dist < 1e-12) continue;
    const double share = normal_components(fz, z - w).complex_normal_mag / dist;
    if (regime.kind == RegimeKind::Tangential && share > 0.05) continue;
    if (regime.kind == RegimeKind::Transversal && share < 0.5) continue;
    out.emplace_back(z, w);
  }
  return out;
}

void CsvTable::add_row(const std::vector<double>& values) {
  std::vector<std::string> row;
  row.reserve(values.size());
  for (double v : values) row.push_back(fmt_g17(v));
  rows.push_back(std::move(row));
}

std::string CsvTable::to_string(std::uint64_t seed, const std::string& extra) const {
  std::string out = "# schema=" + schema + "; seed=" + std::to_string(seed);
  if (!extra.empty()) out += "; " + extra;
  out += "\n";
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (j) out += ",";
    out += columns[j];
  }
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ",";
      out += row[j];
    }
    out += "\n";
  }
  return out;
}

void CsvTable::write(const std::filesystem::path& path, std::uint64_t seed,
                     const std::string& extra) const {
  write_text_file(path, to_string(seed, extra));
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << content;
}

}  // namespace invdist
