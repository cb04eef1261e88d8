#include "constel/tammes.hpp"

#include <cmath>
#include <string>

#include "constel/error.hpp"
#include "constel/geometry.hpp"

namespace constel {

AngleRadians::AngleRadians(double value_rad) : value_(value_rad) {
  if (!(value_rad >= 0.0 && value_rad <= kPi))
    fail(errc::invalid_point, "angle must lie in [0, pi], got " +
                                  std::to_string(value_rad));
}

double contact_angle_cdf(AngleRadians theta, std::int64_t n) {
  if (n < 1) fail(errc::invalid_count, "contact_angle_cdf requires n >= 1");
  const double base = (1.0 + std::cos(theta.value())) / 2.0;
  return 1.0 - std::pow(base, static_cast<double>(n));
}

double nearest_neighbor_cdf(AngleRadians theta, std::int64_t n) {
  if (n < 2) fail(errc::invalid_count, "nearest_neighbor_cdf requires n >= 2");
  return contact_angle_cdf(theta, n - 1);
}

AngleRadians expected_nn_angle(std::int64_t n) {
  if (n < 2) fail(errc::invalid_count, "expected_nn_angle requires n >= 2");
  // log prod (2i-1)/(2i) = sum log1p(-1/(2i))
  double log_prod = 0.0;
  for (std::int64_t i = 1; i < n; ++i)
    log_prod += std::log1p(-1.0 / (2.0 * static_cast<double>(i)));
  return AngleRadians(kPi * std::exp(log_prod));
}

double tammes_approx_dopt(std::int64_t n, double radius_km) {
  if (n < 2) fail(errc::invalid_count, "tammes_approx_dopt requires n >= 2");
  return 2.0 * radius_km * std::sin(expected_nn_angle(n).value());
}

}  // namespace constel
