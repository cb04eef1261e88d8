// constel: spherical point-set models for satellite constellations and the
// assignment-based distance between them.
//
// Subcommands: generate, distance, tammes, experiment, presets. All
// randomness flows from --seed; repeated runs with equal flags produce
// byte-identical output.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "constel/config.hpp"
#include "constel/error.hpp"
#include "constel/experiments.hpp"
#include "constel/generators.hpp"
#include "constel/matching.hpp"
#include "constel/tammes.hpp"
#include "json.hpp"

namespace {

using namespace constel;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) fail(errc::config_invalid, "cannot open output file " + out_path);
  out << text;
}

ModelLabel parse_model_flag(const std::string& name) {
  const auto label = model_label_from_string(name);
  if (!label) fail(errc::config_invalid, "unknown model '" + name + "'");
  return *label;
}

struct GenerateArgs {
  std::string model;
  int n = 0;
  double altitude_km = 0.0;
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string out;
  double gamma_deg = 53.0;
  int orbits = 0;
  int sats_per_orbit = 0;
  std::string orbit_mode = "reconciled";
};

int run_generate(const GenerateArgs& a) {
  const ModelLabel label = parse_model_flag(a.model);
  const double radius = kEarthRadiusKm + a.altitude_km;
  RandomStream rng(a.seed);
  std::optional<PointConfiguration> cfg;
  if (label == ModelLabel::Bpp || label == ModelLabel::Nbpp ||
      label == ModelLabel::Fibonacci) {
    if (a.n <= 0) fail(errc::config_invalid, "--n is required for this model");
    if (label == ModelLabel::Bpp)
      cfg = gen_bpp(a.n, radius, rng);
    else if (label == ModelLabel::Nbpp)
      cfg = gen_nbpp(a.n, radius, rng);
    else
      cfg = gen_fibonacci(a.n, radius);
  } else {
    OrbitShellConfig shell;
    shell.gamma_rad = deg_to_rad(a.gamma_deg);
    shell.n_orbits = a.orbits > 0 ? a.orbits : 72;
    shell.sats_per_orbit = a.sats_per_orbit > 0 ? a.sats_per_orbit : 22;
    shell.altitude_km = a.altitude_km;
    const auto mode = orbit_mode_from_string(a.orbit_mode);
    if (!mode)
      fail(errc::config_invalid, "--orbit-mode must be paper or reconciled");
    shell.mode = label == ModelLabel::OrbitPaper ? OrbitMode::PaperLiteral
                                                 : *mode;
    if (a.n > 0 && a.n != shell.total_points())
      fail(errc::config_invalid,
           "--n disagrees with --orbits x --sats-per-orbit");
    if (label == ModelLabel::OrbitTrackOracle)
      cfg = gen_orbit_track_oracle(shell, rng);
    else
      cfg = gen_orbit(shell, rng);
  }
  write_output(a.format == "json" ? to_json(*cfg) : to_csv(*cfg), a.out);
  return 0;
}

struct DistanceArgs {
  std::string source, target;
  int n = 0;
  double altitude_km = 0.0;
  std::uint64_t seed = 1;
  std::string solver = "greedy";
  std::string out;
  double gamma_deg = 53.0;
  int orbits = 0;
  std::string orbit_mode = "reconciled";
  std::string gamma_as = "polar-band";
};

PointConfiguration make_distance_side(ModelLabel label, const DistanceArgs& a,
                                      RandomStream rng) {
  const double radius = kEarthRadiusKm + a.altitude_km;
  switch (label) {
    case ModelLabel::Bpp:
      return gen_bpp(a.n, radius, rng);
    case ModelLabel::Nbpp:
      return gen_nbpp(a.n, radius, rng);
    case ModelLabel::Fibonacci:
      return gen_fibonacci(a.n, radius);
    case ModelLabel::OrbitPaper:
    case ModelLabel::OrbitReconciled: {
      OrbitShellConfig shell;
      const auto mode = orbit_mode_from_string(a.orbit_mode);
      if (!mode)
        fail(errc::config_invalid, "--orbit-mode must be paper or reconciled");
      shell.mode = label == ModelLabel::OrbitPaper ? OrbitMode::PaperLiteral
                                                   : *mode;
      const auto gmode = gamma_as_from_string(a.gamma_as);
      if (!gmode)
        fail(errc::config_invalid,
             "--gamma-as must be polar-band or inclination");
      const ModelLabel effective_label = shell.mode == OrbitMode::PaperLiteral
                                             ? ModelLabel::OrbitPaper
                                             : ModelLabel::OrbitReconciled;
      shell.gamma_rad = effective_gamma_rad(deg_to_rad(a.gamma_deg),
                                            effective_label, *gmode);
      shell.n_orbits = a.orbits > 0 ? a.orbits : a.n;
      if (a.n % shell.n_orbits != 0)
        fail(errc::config_invalid, "--n must be divisible by --orbits");
      shell.sats_per_orbit = a.n / shell.n_orbits;
      shell.altitude_km = a.altitude_km;
      return gen_orbit(shell, rng);
    }
    case ModelLabel::OrbitTrackOracle:
      fail(errc::config_invalid,
           "orbit-track-oracle is a geometry oracle and cannot enter "
           "distance measurements");
  }
  fail(errc::config_invalid, "unknown model");
}

int run_distance(const DistanceArgs& a) {
  if (a.n <= 0) fail(errc::config_invalid, "--n must be positive");
  const ModelLabel source = parse_model_flag(a.source);
  const ModelLabel target = parse_model_flag(a.target);
  const auto solver = solver_from_string(a.solver);
  if (!solver)
    fail(errc::config_invalid, "--solver must be greedy, exact or both");
  const RandomStream root(a.seed);
  const PointConfiguration src =
      make_distance_side(source, a, root.substream(0));
  const PointConfiguration tgt =
      make_distance_side(target, a, root.substream(1));
  const CostMatrix d = build_cost_matrix(src, tgt);

  auto result_json = [&](const char* name, const MatchOutcome& outcome,
                         std::optional<int> rounds) {
    nlohmann::json o = {{"n", a.n},
                        {"solver", name},
                        {"distance_km", outcome.distance_km},
                        {"assignment", outcome.assignment.target_of}};
    if (rounds) o["rounds"] = *rounds;
    return o;
  };

  nlohmann::json out;
  if (*solver == SolverKind::Both) {
    const GreedyRun g = greedy_match(d);
    out = nlohmann::json::array(
        {result_json("greedy", g.outcome, g.rounds),
         result_json("exact", exact_assignment_poly(d), std::nullopt)});
  } else if (*solver == SolverKind::Greedy) {
    const GreedyRun g = greedy_match(d);
    out = result_json("greedy", g.outcome, g.rounds);
  } else {
    out = result_json("exact", exact_assignment_poly(d), std::nullopt);
  }
  write_output(out.dump(2) + "\n", a.out);
  return 0;
}

struct TammesArgs {
  std::vector<std::int64_t> n_values;
  double altitude_km = 0.0;
  std::string out;
};

int run_tammes(const TammesArgs& a) {
  std::vector<std::int64_t> ns =
      a.n_values.empty() ? std::vector<std::int64_t>{50, 100, 500, 1000}
                         : a.n_values;
  const double radius = kEarthRadiusKm + a.altitude_km;
  std::string csv = "n,approx_dopt_km,measured_fibonacci_dmin_km,relative_error\n";
  for (std::int64_t n : ns) {
    const double approx = tammes_approx_dopt(n, radius);
    const double measured = min_pairwise_distance(
        gen_fibonacci(static_cast<int>(n), radius));
    csv += std::to_string(n);
    csv += ',';
    csv += format_double(approx);
    csv += ',';
    csv += format_double(measured);
    csv += ',';
    csv += format_double(std::abs(approx - measured) / measured);
    csv += '\n';
  }
  write_output(csv, a.out);
  return 0;
}

struct ExperimentArgs {
  std::string preset;
  std::string config_path;
  std::optional<long long> iterations;
  std::optional<std::uint64_t> seed;
  std::string solver;
  std::string format = "csv";
  std::string out;
};

int run_exp(const ExperimentArgs& a) {
  if (a.preset.empty() == a.config_path.empty())
    fail(errc::config_invalid, "pass exactly one of --preset or --config");
  ExperimentConfig cfg = a.preset.empty() ? load_config(a.config_path)
                                          : figure_preset(a.preset);
  if (a.iterations) cfg.n_iterations = *a.iterations;
  if (a.seed) cfg.base_seed = *a.seed;
  if (!a.solver.empty()) {
    const auto solver = solver_from_string(a.solver);
    if (!solver)
      fail(errc::config_invalid, "--solver must be greedy, exact or both");
    cfg.solver = *solver;
  }
  const std::vector<DistanceStats> rows = run_experiment(cfg);
  write_output(a.format == "json" ? stats_to_json(rows) + "\n"
                                  : stats_to_csv(rows),
               a.out);
  return 0;
}

int run_presets(const std::string& out_path) {
  std::string text;
  for (const char* name : {"fig3", "fig4", "fig5", "fig6"}) {
    text += "# ---- figure preset: ";
    text += name;
    text += " ----\n";
    text += config_to_text(figure_preset(name));
    text += "\n";
  }
  for (const char* name : {"starlink", "iridium", "oneweb"}) {
    const OrbitShellConfig shell = constellation_preset(name);
    text += "# ---- constellation preset: ";
    text += name;
    text += " ----\n";
    text += "# gamma_deg = " + format_double(rad_to_deg(shell.gamma_rad));
    text += ", orbit_grids = [" + std::to_string(shell.n_orbits) + "x" +
            std::to_string(shell.sats_per_orbit) + "]";
    text += ", altitude_km = " + format_double(shell.altitude_km);
    text += ", n_points = " + std::to_string(shell.total_points());
    text += "\n\n";
  }
  write_output(text, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical constellation point-set models and distances"};
  app.require_subcommand(1);

  GenerateArgs gen;
  CLI::App* generate = app.add_subcommand(
      "generate", "Sample one point configuration and emit it as CSV/JSON");
  generate->add_option("--model", gen.model,
                       "bpp|nbpp|fibonacci|orbit|orbit-paper|orbit-track-oracle")
      ->required();
  generate->add_option("--n", gen.n, "point count (non-orbit models)");
  generate->add_option("--altitude-km", gen.altitude_km,
                       "shell altitude above the 6371 km Earth radius");
  generate->add_option("--seed", gen.seed, "random seed");
  generate->add_option("--format", gen.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  generate->add_option("--out", gen.out, "output path (default stdout)");
  generate->add_option("--gamma-deg", gen.gamma_deg,
                       "generator inclination parameter (no translation)");
  generate->add_option("--orbits", gen.orbits, "orbit count (orbit models)");
  generate->add_option("--sats-per-orbit", gen.sats_per_orbit,
                       "satellites per orbit (orbit models)");
  generate->add_option("--orbit-mode", gen.orbit_mode, "paper|reconciled")
      ->check(CLI::IsMember({"paper", "reconciled"}));

  DistanceArgs dist;
  CLI::App* distance = app.add_subcommand(
      "distance", "Distance between two freshly sampled configurations");
  distance->add_option("--source", dist.source, "source model")->required();
  distance->add_option("--target", dist.target, "target model")->required();
  distance->add_option("--n", dist.n, "points per configuration")->required();
  distance->add_option("--altitude-km", dist.altitude_km, "shell altitude");
  distance->add_option("--seed", dist.seed, "random seed");
  distance->add_option("--solver", dist.solver, "greedy|exact|both")
      ->check(CLI::IsMember({"greedy", "exact", "both"}));
  distance->add_option("--out", dist.out, "output path (default stdout)");
  distance->add_option("--gamma-deg", dist.gamma_deg,
                       "orbit inclination, interpreted per --gamma-as");
  distance->add_option("--orbits", dist.orbits,
                       "orbit count (default: one satellite per orbit)");
  distance->add_option("--orbit-mode", dist.orbit_mode, "paper|reconciled")
      ->check(CLI::IsMember({"paper", "reconciled"}));
  distance->add_option("--gamma-as", dist.gamma_as,
                       "polar-band|inclination")
      ->check(CLI::IsMember({"polar-band", "inclination"}));

  TammesArgs tam;
  CLI::App* tammes = app.add_subcommand(
      "tammes",
      "Packing-distance approximation vs the measured lattice minimum");
  tammes->add_option("--n", tam.n_values,
                     "point counts (repeatable; default 50 100 500 1000)");
  tammes->add_option("--altitude-km", tam.altitude_km, "shell altitude");
  tammes->add_option("--out", tam.out, "output path (default stdout)");

  ExperimentArgs exp;
  CLI::App* experiment = app.add_subcommand(
      "experiment", "Seeded Monte Carlo distance experiments");
  experiment->add_option("--preset", exp.preset, "fig3|fig4|fig5|fig6");
  experiment->add_option("--config", exp.config_path, "config file path");
  experiment->add_option("--iterations", exp.iterations,
                         "Monte Carlo iterations per sweep point");
  experiment->add_option("--seed", exp.seed, "base seed");
  experiment->add_option("--solver", exp.solver, "greedy|exact|both");
  experiment->add_option("--format", exp.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  experiment->add_option("--out", exp.out, "output path (default stdout)");

  std::string presets_out;
  CLI::App* presets = app.add_subcommand(
      "presets", "Print figure and constellation presets as config files");
  presets->add_option("--out", presets_out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (generate->parsed()) return run_generate(gen);
    if (distance->parsed()) return run_distance(dist);
    if (tammes->parsed()) return run_tammes(tam);
    if (experiment->parsed()) return run_exp(exp);
    if (presets->parsed()) return run_presets(presets_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.is_config() ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
