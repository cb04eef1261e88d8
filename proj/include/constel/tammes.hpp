#pragma once

#include <cstdint>

namespace constel {

/// Central angle constrained to [0, pi].
class AngleRadians {
 public:
  explicit AngleRadians(double value_rad);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// CDF of the contact angle (central angle to the nearest of n uniform
/// points): 1 - ((1 + cos(theta))/2)^n.
double contact_angle_cdf(AngleRadians theta, std::int64_t n);

/// CDF of the nearest-neighbor angle among n uniform points: the contact
/// angle law with exponent n-1.
double nearest_neighbor_cdf(AngleRadians theta, std::int64_t n);

/// Expected nearest-neighbor angle, pi * prod_{i=1}^{n-1} (2i-1)/(2i).
/// Evaluated as a sum of log1p terms to stay accurate and avoid underflow
/// for large n; equals pi * C(2m, m) / 4^m with m = n-1.
AngleRadians expected_nn_angle(std::int64_t n);

/// Approximate optimum of the max-min spherical packing distance for n
/// points on a sphere of the given radius: 2R*sin(expected_nn_angle(n)).
double tammes_approx_dopt(std::int64_t n, double radius_km);

}  // namespace constel
