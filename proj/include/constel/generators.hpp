#pragma once

#include "constel/geometry.hpp"
#include "constel/random.hpp"

namespace constel {

enum class OrbitMode {
  /// Polar law F(theta) = (cos g - cos theta)/(2 cos g) on [g, pi-g], with
  /// the azimuth offset arcsin(tan theta / tan g) clamped into range. The
  /// clamp makes the offset degenerate (+-pi/2) across the whole band, so
  /// azimuths land exactly on the node grid; kept for comparison against
  /// the reconciled reading.
  PaperLiteral,
  /// Consistent reading: gamma is the orbit inclination, latitude L has
  /// sin(L) ~ U[-sin g, sin g], and the azimuth offset arcsin(tan L / tan g)
  /// is always well defined. Every point lies exactly on one of the
  /// n_orbits great circles with ascending nodes 2*pi*k/n_orbits.
  Reconciled,
};

std::string_view to_string(OrbitMode mode);
std::optional<OrbitMode> orbit_mode_from_string(std::string_view name);

/// Shell of n_orbits circular orbits at one altitude and inclination
/// parameter, each carrying sats_per_orbit satellites.
struct OrbitShellConfig {
  double gamma_rad = deg_to_rad(53.0);
  int n_orbits = 72;
  int sats_per_orbit = 22;
  double altitude_km = 550.0;
  OrbitMode mode = OrbitMode::Reconciled;

  int total_points() const noexcept { return n_orbits * sats_per_orbit; }
  double shell_radius_km() const noexcept {
    return kEarthRadiusKm + altitude_km;
  }
  void validate() const;
};

/// n points uniform on the sphere: azimuth ~ U[0, 2pi), polar angle
/// arccos(1 - 2u) with u ~ U[0, 1).
PointConfiguration gen_bpp(int n, double radius_km, RandomStream& rng);

/// Pole-clustered comparison process: polar angle ~ U[0, pi].
PointConfiguration gen_nbpp(int n, double radius_km, RandomStream& rng);

/// Deterministic golden-angle lattice, mirrored-branch construction:
/// theta_i = arccos((2i-1)/(n-1)) and phi_i = (sqrt(5)-1)*pi*i for
/// i <= ceil(n/2); the remaining points mirror the polar angle and restart
/// the azimuth index. arccos arguments are clamped to [-1, 1] (the odd-n
/// midpoint overshoots 1). Requires n >= 2.
PointConfiguration gen_fibonacci(int n, double radius_km);

/// Stochastic orbit-shell point process; see OrbitMode for the two laws.
PointConfiguration gen_orbit(const OrbitShellConfig& cfg, RandomStream& rng);

/// Geometric validation oracle: uniform orbit index and uniform argument of
/// latitude along the rotated equatorial circle, so points sit exactly on
/// the configured great circles. Its polar marginal is arcsine-shaped and
/// intentionally differs from gen_orbit; use it only for plane-membership
/// checks, never in distance experiments.
PointConfiguration gen_orbit_track_oracle(const OrbitShellConfig& cfg,
                                          RandomStream& rng);

/// Unit normal of the orbit plane with the given inclination and ascending
/// node longitude.
CartesianPoint orbit_plane_normal(double gamma_rad, double node_rad);

/// Smallest |normal . unit-position| over the shell's n_orbits planes;
/// zero for a point exactly on one of the great circles.
double orbit_plane_residual(const OrbitShellConfig& cfg,
                            const SphericalPoint& p);

}  // namespace constel
