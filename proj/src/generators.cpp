#include "constel/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "constel/error.hpp"

namespace constel {

namespace {

constexpr double kGoldenAzimuth = 3.8832220774509327;  // (sqrt(5)-1)*pi

void require_count(int n, int minimum, const char* who) {
  if (n < minimum)
    fail(errc::invalid_count, std::string(who) + " requires n >= " +
                                  std::to_string(minimum) + ", got " +
                                  std::to_string(n));
}

}  // namespace

std::string_view to_string(OrbitMode mode) {
  return mode == OrbitMode::PaperLiteral ? "paper" : "reconciled";
}

std::optional<OrbitMode> orbit_mode_from_string(std::string_view name) {
  if (name == "paper") return OrbitMode::PaperLiteral;
  if (name == "reconciled") return OrbitMode::Reconciled;
  return std::nullopt;
}

void OrbitShellConfig::validate() const {
  if (!(gamma_rad > 0.0 && gamma_rad < kPi / 2.0))
    fail(errc::invalid_inclination,
         "orbit inclination parameter must lie strictly in (0, pi/2)");
  if (n_orbits < 1) fail(errc::invalid_count, "n_orbits must be >= 1");
  if (sats_per_orbit < 1)
    fail(errc::invalid_count, "sats_per_orbit must be >= 1");
}

PointConfiguration gen_bpp(int n, double radius_km, RandomStream& rng) {
  require_count(n, 1, "gen_bpp");
  std::vector<SphericalPoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double theta = std::acos(1.0 - 2.0 * rng.next_unit());
    const double phi = kTwoPi * rng.next_unit();
    pts.emplace_back(radius_km, theta, phi);
  }
  return PointConfiguration(radius_km, std::move(pts), ModelLabel::Bpp);
}

PointConfiguration gen_nbpp(int n, double radius_km, RandomStream& rng) {
  require_count(n, 1, "gen_nbpp");
  std::vector<SphericalPoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double theta = kPi * rng.next_unit();
    const double phi = kTwoPi * rng.next_unit();
    pts.emplace_back(radius_km, theta, phi);
  }
  return PointConfiguration(radius_km, std::move(pts), ModelLabel::Nbpp);
}

PointConfiguration gen_fibonacci(int n, double radius_km) {
  require_count(n, 2, "gen_fibonacci");
  const int half = (n + 1) / 2;  // ceil(n/2)
  std::vector<SphericalPoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int j = i <= half ? i : i - half;
    const double arg = std::clamp(
        (2.0 * j - 1.0) / (static_cast<double>(n) - 1.0), -1.0, 1.0);
    const double branch_theta = std::acos(arg);
    const double theta = i <= half ? branch_theta : kPi - branch_theta;
    pts.emplace_back(radius_km, theta, kGoldenAzimuth * j);
  }
  return PointConfiguration(radius_km, std::move(pts), ModelLabel::Fibonacci);
}

PointConfiguration gen_orbit(const OrbitShellConfig& cfg, RandomStream& rng) {
  cfg.validate();
  const double radius = cfg.shell_radius_km();
  const double tan_gamma = std::tan(cfg.gamma_rad);
  const int n = cfg.total_points();
  std::vector<SphericalPoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double theta = 0.0, phi = 0.0;
    if (cfg.mode == OrbitMode::PaperLiteral) {
      theta = std::acos(std::cos(cfg.gamma_rad) * (1.0 - 2.0 * rng.next_unit()));
      const double delta =
          std::asin(std::clamp(std::tan(theta) / tan_gamma, -1.0, 1.0));
      const std::uint64_t k = 1 + rng.next_below(cfg.n_orbits);
      const double sign = rng.next_bool() ? 1.0 : -1.0;
      phi = kTwoPi * static_cast<double>(k) / cfg.n_orbits + sign * delta;
    } else {
      const double sin_lat =
          std::sin(cfg.gamma_rad) * (2.0 * rng.next_unit() - 1.0);
      const double lat = std::asin(sin_lat);
      theta = kPi / 2.0 - lat;
      const double delta =
          std::asin(std::clamp(std::tan(lat) / tan_gamma, -1.0, 1.0));
      const std::uint64_t k = 1 + rng.next_below(cfg.n_orbits);
      const double node = kTwoPi * static_cast<double>(k) / cfg.n_orbits;
      phi = rng.next_bool() ? node + kPi - delta : node + delta;
    }
    pts.emplace_back(radius, theta, phi);
  }
  const auto label = cfg.mode == OrbitMode::PaperLiteral
                         ? ModelLabel::OrbitPaper
                         : ModelLabel::OrbitReconciled;
  return PointConfiguration(radius, std::move(pts), label);
}

PointConfiguration gen_orbit_track_oracle(const OrbitShellConfig& cfg,
                                          RandomStream& rng) {
  cfg.validate();
  const double radius = cfg.shell_radius_km();
  const double cg = std::cos(cfg.gamma_rad);
  const double sg = std::sin(cfg.gamma_rad);
  const int n = cfg.total_points();
  std::vector<SphericalPoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::uint64_t k = 1 + rng.next_below(cfg.n_orbits);
    const double node = kTwoPi * static_cast<double>(k) / cfg.n_orbits;
    const double alpha = kTwoPi * rng.next_unit();  // argument of latitude
    // Equatorial circle rotated to inclination gamma, node at `node`.
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double cn = std::cos(node), sn = std::sin(node);
    const double x = cn * ca - sn * sa * cg;
    const double y = sn * ca + cn * sa * cg;
    const double z = sa * sg;
    const double theta = std::acos(std::clamp(z, -1.0, 1.0));
    pts.emplace_back(radius, theta, std::atan2(y, x));
  }
  return PointConfiguration(radius, std::move(pts),
                            ModelLabel::OrbitTrackOracle);
}

CartesianPoint orbit_plane_normal(double gamma_rad, double node_rad) {
  return {std::sin(gamma_rad) * std::sin(node_rad),
          -std::sin(gamma_rad) * std::cos(node_rad), std::cos(gamma_rad)};
}

double orbit_plane_residual(const OrbitShellConfig& cfg,
                            const SphericalPoint& p) {
  const CartesianPoint c = to_cartesian(p);
  const double inv_r = 1.0 / p.radius_km;
  const double x = c.x_km * inv_r, y = c.y_km * inv_r, z = c.z_km * inv_r;
  double best = std::numeric_limits<double>::infinity();
  for (int k = 1; k <= cfg.n_orbits; ++k) {
    const double node = kTwoPi * static_cast<double>(k) / cfg.n_orbits;
    const CartesianPoint nrm = orbit_plane_normal(cfg.gamma_rad, node);
    best = std::min(best,
                    std::abs(nrm.x_km * x + nrm.y_km * y + nrm.z_km * z));
  }
  return best;
}

}  // namespace constel
