#pragma once

#include <filesystem>
#include <string_view>

#include "constel/experiments.hpp"

namespace constel {

/// Parse the flat key-value experiment config format:
///
///   # comment
///   preset = fig5            # optional base configuration
///   source_model = bpp
///   target_model = fibonacci
///   n_points = [100, 400, 1000]
///   altitude_km = [0]
///   n_iterations = 1000
///   base_seed = 42
///   solver = greedy
///
/// Scalar keys: name, kind (distance|tammes), source_model, target_model,
/// orbit_mode (paper|reconciled), gamma_as (polar-band|inclination),
/// sats_per_orbit, n_iterations, base_seed, solver, pooled_aggregation.
/// List-valued sweep keys (a bare scalar is a one-element list): n_points,
/// altitude_km, gamma_deg, gamma_rad, orbit_grids (entries like 72x22).
/// gamma_deg and gamma_rad conflict; unknown keys are rejected. Curve-level
/// keys cannot override a multi-curve preset.
ExperimentConfig parse_config(std::string_view text);

/// parse_config over the contents of a file.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Render a config back to the key-value format (used by `presets`).
std::string config_to_text(const ExperimentConfig& cfg);

}  // namespace constel
