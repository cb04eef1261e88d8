#include "constel/experiments.hpp"

#include <cmath>
#include <string>

#include "constel/error.hpp"
#include "constel/matching.hpp"
#include "constel/stats.hpp"
#include "constel/tammes.hpp"
#include "json.hpp"

namespace constel {

namespace {

bool is_orbit(ModelLabel label) {
  return label == ModelLabel::OrbitPaper ||
         label == ModelLabel::OrbitReconciled;
}

struct SweepPoint {
  int n = 0;
  OrbitGrid grid;  // zero when the curve has no orbit side
  double altitude_km = 0.0;
  std::optional<double> gamma_deg;
};

std::vector<SweepPoint> expand_sweep(const CurveConfig& curve) {
  std::vector<std::pair<int, OrbitGrid>> counts;
  if (!curve.orbit_grids.empty()) {
    for (const OrbitGrid& g : curve.orbit_grids)
      counts.push_back({g.orbits * g.sats, g});
  } else {
    for (int n : curve.n_points) {
      OrbitGrid g;
      if (curve.involves_orbit())
        g = {n / curve.sats_per_orbit, curve.sats_per_orbit};
      counts.push_back({n, g});
    }
  }
  std::vector<SweepPoint> sweep;
  for (const auto& [n, grid] : counts) {
    for (double h : curve.altitude_km) {
      if (curve.involves_orbit()) {
        for (double g : curve.gamma_deg)
          sweep.push_back({n, grid, h, g});
      } else {
        sweep.push_back({n, grid, h, std::nullopt});
      }
    }
  }
  return sweep;
}

PointConfiguration generate_model(ModelLabel label, const SweepPoint& at,
                                  GammaAs gamma_as, RandomStream rng) {
  const double radius = kEarthRadiusKm + at.altitude_km;
  switch (label) {
    case ModelLabel::Bpp:
      return gen_bpp(at.n, radius, rng);
    case ModelLabel::Nbpp:
      return gen_nbpp(at.n, radius, rng);
    case ModelLabel::Fibonacci:
      return gen_fibonacci(at.n, radius);
    case ModelLabel::OrbitPaper:
    case ModelLabel::OrbitReconciled: {
      OrbitShellConfig shell;
      shell.gamma_rad =
          effective_gamma_rad(deg_to_rad(*at.gamma_deg), label, gamma_as);
      shell.n_orbits = at.grid.orbits;
      shell.sats_per_orbit = at.grid.sats;
      shell.altitude_km = at.altitude_km;
      shell.mode = label == ModelLabel::OrbitPaper ? OrbitMode::PaperLiteral
                                                   : OrbitMode::Reconciled;
      return gen_orbit(shell, rng);
    }
    case ModelLabel::OrbitTrackOracle:
      fail(errc::config_invalid,
           "orbit-track-oracle is a geometry oracle; it cannot enter "
           "distance experiments");
  }
  fail(errc::config_invalid, "unknown model label");
}

void validate_curve(const CurveConfig& curve, SolverKind solver) {
  if (!curve.orbit_grids.empty() && !curve.n_points.empty())
    fail(errc::config_invalid,
         "specify either n_points or orbit_grids for a curve, not both");
  if (curve.orbit_grids.empty() && curve.n_points.empty())
    fail(errc::config_invalid, "curve has no point-count sweep");
  if (curve.source == ModelLabel::OrbitTrackOracle ||
      curve.target == ModelLabel::OrbitTrackOracle)
    fail(errc::config_invalid,
         "orbit-track-oracle cannot be used in distance experiments");
  const bool orbit = curve.involves_orbit();
  if (orbit) {
    if (curve.gamma_deg.empty())
      fail(errc::config_invalid, "orbit curves need at least one gamma_deg");
    for (double g : curve.gamma_deg) {
      if (!(g > 0.0 && g < 90.0))
        fail(errc::invalid_inclination,
             "gamma_deg must lie strictly between 0 and 90");
    }
    if (curve.orbit_grids.empty()) {
      if (curve.sats_per_orbit < 1)
        fail(errc::config_invalid, "sats_per_orbit must be >= 1");
      for (int n : curve.n_points) {
        if (n % curve.sats_per_orbit != 0)
          fail(errc::config_invalid,
               "n_points " + std::to_string(n) +
                   " is not divisible by sats_per_orbit " +
                   std::to_string(curve.sats_per_orbit));
      }
    }
    for (const OrbitGrid& g : curve.orbit_grids) {
      if (g.orbits < 1 || g.sats < 1)
        fail(errc::config_invalid, "orbit grids need orbits >= 1, sats >= 1");
    }
  } else if (!curve.orbit_grids.empty()) {
    fail(errc::config_invalid, "orbit_grids given but neither model is an "
                               "orbit model");
  }
  const int n_min =
      (curve.source == ModelLabel::Fibonacci ||
       curve.target == ModelLabel::Fibonacci)
          ? 2
          : 1;
  for (const SweepPoint& at : expand_sweep(curve)) {
    if (at.n < n_min)
      fail(errc::invalid_count,
           "sweep point count " + std::to_string(at.n) + " is below " +
               std::to_string(n_min));
    if (at.n > 10 && solver != SolverKind::Greedy)
      fail(errc::size_limit,
           "the exact solver is limited to sweeps with N <= 10 points");
  }
}

std::vector<DistanceStats> run_tammes_comparison(const ExperimentConfig& cfg) {
  if (cfg.curves.empty())
    fail(errc::config_invalid, "tammes comparison needs one curve with the "
                               "n_points and altitude sweeps");
  const CurveConfig& curve = cfg.curves.front();
  std::vector<DistanceStats> rows;
  for (int n : curve.n_points) {
    if (n < 2) fail(errc::invalid_count, "tammes comparison needs n >= 2");
    for (double h : curve.altitude_km) {
      const double radius = kEarthRadiusKm + h;
      const double approx = tammes_approx_dopt(n, radius);
      const double measured = min_pairwise_distance(gen_fibonacci(n, radius));
      for (const auto& [target, value] :
           {std::pair<const char*, double>{"cor2-dopt", approx},
            std::pair<const char*, double>{"measured-dmin", measured}}) {
        DistanceStats row;
        row.experiment = cfg.name;
        row.source_model = "fibonacci";
        row.target_model = target;
        row.n_points = n;
        row.altitude_km = h;
        row.n_iterations = 1;
        row.solver = "none";
        row.mean_km = value;
        row.seed = cfg.base_seed;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace

std::string_view to_string(SolverKind solver) {
  switch (solver) {
    case SolverKind::Greedy: return "greedy";
    case SolverKind::Exact: return "exact";
    case SolverKind::Both: return "both";
  }
  return "unknown";
}

std::optional<SolverKind> solver_from_string(std::string_view name) {
  if (name == "greedy") return SolverKind::Greedy;
  if (name == "exact") return SolverKind::Exact;
  if (name == "both") return SolverKind::Both;
  return std::nullopt;
}

std::string_view to_string(GammaAs mode) {
  return mode == GammaAs::PolarBand ? "polar-band" : "inclination";
}

std::optional<GammaAs> gamma_as_from_string(std::string_view name) {
  if (name == "polar-band") return GammaAs::PolarBand;
  if (name == "inclination") return GammaAs::Inclination;
  return std::nullopt;
}

bool CurveConfig::involves_orbit() const {
  return is_orbit(source) || is_orbit(target);
}

double effective_gamma_rad(double gamma_rad, ModelLabel orbit_label,
                           GammaAs gamma_as) {
  if (orbit_label == ModelLabel::OrbitPaper) return gamma_rad;
  return gamma_as == GammaAs::PolarBand ? kPi / 2.0 - gamma_rad : gamma_rad;
}

void ExperimentConfig::validate() const {
  if (n_iterations < 1)
    fail(errc::config_invalid, "n_iterations must be >= 1");
  if (curves.empty())
    fail(errc::config_invalid, "experiment has no curves");
  if (kind == ExperimentKind::Distance) {
    for (const CurveConfig& c : curves) validate_curve(c, solver);
  }
}

std::vector<DistanceStats> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.kind == ExperimentKind::TammesComparison)
    return run_tammes_comparison(cfg);

  const RandomStream root(cfg.base_seed);
  std::vector<DistanceStats> rows;
  std::uint64_t row_index = 0;
  for (const CurveConfig& curve : cfg.curves) {
    for (const SweepPoint& at : expand_sweep(curve)) {
      const RandomStream row_stream = root.substream(row_index++);
      const bool greedy = cfg.solver != SolverKind::Exact;
      const bool exact = cfg.solver != SolverKind::Greedy;
      std::vector<double> greedy_samples, exact_samples;
      if (greedy) greedy_samples.reserve(cfg.n_iterations);
      if (exact) exact_samples.reserve(cfg.n_iterations);
      for (long long it = 0; it < cfg.n_iterations; ++it) {
        const RandomStream iter = row_stream.substream(it);
        RandomStream src_rng = iter.substream(0);
        RandomStream tgt_rng = iter.substream(1);
        const PointConfiguration src =
            generate_model(curve.source, at, curve.gamma_as, src_rng);
        const PointConfiguration tgt =
            generate_model(curve.target, at, curve.gamma_as, tgt_rng);
        const CostMatrix d = build_cost_matrix(src, tgt);
        if (greedy) greedy_samples.push_back(greedy_match(d).outcome.distance_km);
        if (exact) exact_samples.push_back(exact_assignment_poly(d).distance_km);
      }
      auto emit = [&](const char* solver_name,
                      const std::vector<double>& samples) {
        const SummaryStats s = summarize(samples);
        DistanceStats row;
        row.experiment = cfg.name;
        row.source_model = std::string(to_string(curve.source));
        row.target_model = std::string(to_string(curve.target));
        row.n_points = at.n;
        row.altitude_km = at.altitude_km;
        row.gamma_deg = at.gamma_deg;
        row.n_iterations = cfg.n_iterations;
        row.solver = solver_name;
        if (cfg.pooled_aggregation) {
          double total2 = 0.0;
          for (double w : samples) total2 += w * w;
          row.mean_km = std::sqrt(total2) / static_cast<double>(samples.size());
        } else {
          row.mean_km = s.mean;
        }
        row.std_km = s.stddev;
        row.stderr_km = s.stderr_mean;
        row.seed = cfg.base_seed;
        rows.push_back(std::move(row));
      };
      if (greedy) emit("greedy", greedy_samples);
      if (exact) emit("exact", exact_samples);
    }
  }
  return rows;
}

ExperimentConfig figure_preset(std::string_view name) {
  ExperimentConfig cfg;
  cfg.name = std::string(name);
  if (name == "fig3") {
    CurveConfig c;
    c.source = ModelLabel::Bpp;
    c.target = ModelLabel::OrbitReconciled;
    for (int n = 2; n <= 10; ++n) c.orbit_grids.push_back({n, 1});
    c.altitude_km = {550.0};
    c.gamma_deg = {53.0};
    cfg.curves = {c};
    cfg.solver = SolverKind::Both;
    return cfg;
  }
  if (name == "fig4") {
    cfg.kind = ExperimentKind::TammesComparison;
    CurveConfig c;
    c.source = ModelLabel::Fibonacci;
    c.target = ModelLabel::Fibonacci;
    c.n_points = {50, 100, 500, 1000};
    c.altitude_km = {0.0, 550.0};
    cfg.curves = {c};
    cfg.n_iterations = 1;
    return cfg;
  }
  if (name == "fig5") {
    CurveConfig ground;
    ground.source = ModelLabel::Bpp;
    ground.target = ModelLabel::Fibonacci;
    ground.n_points = {100, 400, 1000};
    ground.altitude_km = {0.0};
    CurveConfig ground_nbpp = ground;
    ground_nbpp.source = ModelLabel::Nbpp;
    CurveConfig shell;
    shell.source = ModelLabel::Bpp;
    shell.target = ModelLabel::OrbitReconciled;
    shell.orbit_grids = {{5, 22}, {20, 22}, {45, 22}};
    shell.altitude_km = {550.0};
    shell.gamma_deg = {53.0};
    CurveConfig self = shell;
    self.source = ModelLabel::OrbitReconciled;
    cfg.curves = {ground, ground_nbpp, shell, self};
    return cfg;
  }
  if (name == "fig6") {
    CurveConfig c;
    c.source = ModelLabel::Bpp;
    c.target = ModelLabel::OrbitReconciled;
    c.orbit_grids = {{9, 22}, {36, 22}, {72, 22}};
    c.altitude_km = {550.0, 1200.0};
    c.gamma_deg = {53.0, 87.5};
    cfg.curves = {c};
    return cfg;
  }
  fail(errc::config_invalid,
       "unknown figure preset '" + std::string(name) + "'");
}

OrbitShellConfig constellation_preset(std::string_view name) {
  OrbitShellConfig shell;
  if (name == "starlink") {
    shell.gamma_rad = deg_to_rad(53.0);
    shell.n_orbits = 72;
    shell.sats_per_orbit = 22;
    shell.altitude_km = 550.0;
    return shell;
  }
  if (name == "iridium") {
    shell.gamma_rad = deg_to_rad(87.5);
    shell.n_orbits = 9;
    shell.sats_per_orbit = 9;
    shell.altitude_km = 778.0;
    return shell;
  }
  if (name == "oneweb") {
    shell.gamma_rad = deg_to_rad(87.5);
    shell.n_orbits = 18;
    shell.sats_per_orbit = 40;
    shell.altitude_km = 1200.0;
    return shell;
  }
  fail(errc::config_invalid,
       "unknown constellation preset '" + std::string(name) + "'");
}

std::string stats_to_csv(const std::vector<DistanceStats>& rows) {
  std::string out =
      "experiment,source_model,target_model,n_points,altitude_km,gamma_deg,"
      "n_iterations,solver,mean_km,std_km,stderr_km,seed\n";
  for (const DistanceStats& r : rows) {
    out += r.experiment;
    out += ',';
    out += r.source_model;
    out += ',';
    out += r.target_model;
    out += ',';
    out += std::to_string(r.n_points);
    out += ',';
    out += format_double(r.altitude_km);
    out += ',';
    if (r.gamma_deg) out += format_double(*r.gamma_deg);
    out += ',';
    out += std::to_string(r.n_iterations);
    out += ',';
    out += r.solver;
    out += ',';
    out += format_double(r.mean_km);
    out += ',';
    out += format_double(r.std_km);
    out += ',';
    out += format_double(r.stderr_km);
    out += ',';
    out += std::to_string(r.seed);
    out += '\n';
  }
  return out;
}

std::string stats_to_json(const std::vector<DistanceStats>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const DistanceStats& r : rows) {
    nlohmann::json o = {{"experiment", r.experiment},
                        {"source_model", r.source_model},
                        {"target_model", r.target_model},
                        {"n_points", r.n_points},
                        {"altitude_km", r.altitude_km},
                        {"n_iterations", r.n_iterations},
                        {"solver", r.solver},
                        {"mean_km", r.mean_km},
                        {"std_km", r.std_km},
                        {"stderr_km", r.stderr_km},
                        {"seed", r.seed}};
    if (r.gamma_deg)
      o["gamma_deg"] = *r.gamma_deg;
    else
      o["gamma_deg"] = nullptr;
    arr.push_back(std::move(o));
  }
  return arr.dump(2);
}

}  // namespace constel
