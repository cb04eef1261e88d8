#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace constel {

inline constexpr double kEarthRadiusKm = 6371.0;
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

inline constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Reduce an azimuth to the canonical range [0, 2*pi).
double canonical_azimuth(double azimuth_rad);

enum class ModelLabel {
  Bpp,
  Nbpp,
  Fibonacci,
  OrbitPaper,
  OrbitReconciled,
  OrbitTrackOracle,
};

/// CLI-facing name ("bpp", "nbpp", "fibonacci", "orbit-paper",
/// "orbit-reconciled", "orbit-track-oracle").
std::string_view to_string(ModelLabel label);
std::optional<ModelLabel> model_label_from_string(std::string_view name);

/// Position on a sphere. Angles in radians: polar in [0, pi] measured from
/// the +z axis, azimuth canonicalized to [0, 2*pi) at construction.
struct SphericalPoint {
  double radius_km;
  double polar_rad;
  double azimuth_rad;

  SphericalPoint(double radius_km, double polar_rad, double azimuth_rad);
};

struct CartesianPoint {
  double x_km;
  double y_km;
  double z_km;
};

/// Ordered set of same-radius points with the model that produced them.
class PointConfiguration {
 public:
  PointConfiguration(double radius_km, std::vector<SphericalPoint> points,
                     ModelLabel label);

  double radius_km() const noexcept { return radius_km_; }
  ModelLabel label() const noexcept { return label_; }
  const std::vector<SphericalPoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

 private:
  double radius_km_;
  std::vector<SphericalPoint> points_;
  ModelLabel label_;
};

/// Straight-line (chord) distance between two points on the same sphere:
/// R*sqrt(2*(1 - cos(t_i)cos(t_j) - sin(t_i)sin(t_j)cos(p_i - p_j))).
/// The radicand is floored at zero to absorb rounding for near-identical
/// points. Radii must match exactly.
double chord_distance(const SphericalPoint& a, const SphericalPoint& b);

CartesianPoint to_cartesian(const SphericalPoint& p);
SphericalPoint from_cartesian(const CartesianPoint& c);

/// Minimum chord distance over all point pairs; exact O(N^2) scan.
/// Requires at least two points.
double min_pairwise_distance(const PointConfiguration& cfg);

/// CSV with header `index,radius_km,polar_rad,azimuth_rad`; floats are
/// serialized shortest-round-trip so parsing back is lossless.
std::string to_csv(const PointConfiguration& cfg);
PointConfiguration configuration_from_csv(std::string_view csv,
                                          ModelLabel label);

/// JSON array of {index, radius_km, polar_rad, azimuth_rad} records.
std::string to_json(const PointConfiguration& cfg);

/// Shortest-round-trip decimal rendering of a double (CSV/JSON fields).
std::string format_double(double value);

}  // namespace constel
