#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "constel/error.hpp"
#include "constel/generators.hpp"
#include "constel/tammes.hpp"

using namespace constel;

TEST_CASE("contact angle CDF endpoints") {
  CHECK(contact_angle_cdf(AngleRadians(0.0), 7) == doctest::Approx(0.0));
  CHECK(contact_angle_cdf(AngleRadians(kPi), 7) == doctest::Approx(1.0));
}

TEST_CASE("contact angle CDF known values") {
  CHECK(contact_angle_cdf(AngleRadians(kPi / 2.0), 1) ==
        doctest::Approx(0.5).epsilon(1e-12));
  // n = 10 at the equator: 1 - 2^-10.
  CHECK(contact_angle_cdf(AngleRadians(kPi / 2.0), 10) ==
        doctest::Approx(0.9990234375).epsilon(1e-12));
}

TEST_CASE("contact angle CDF is nondecreasing and within [0, 1]") {
  for (std::int64_t n : {1, 2, 10, 1000}) {
    double prev = 0.0;
    for (int k = 0; k <= 64; ++k) {
      const double theta = kPi * k / 64.0;
      const double v = contact_angle_cdf(AngleRadians(theta), n);
      CHECK(v >= prev - 1e-15);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
      prev = v;
    }
  }
}

TEST_CASE("nearest neighbor CDF reduces to the contact law") {
  for (int k = 0; k <= 32; ++k) {
    const AngleRadians theta(kPi * k / 32.0);
    CHECK(nearest_neighbor_cdf(theta, 2) ==
          doctest::Approx(contact_angle_cdf(theta, 1)).epsilon(1e-15));
  }
  CHECK(nearest_neighbor_cdf(AngleRadians(kPi), 9) == doctest::Approx(1.0));
  // n = 5 at 60 degrees: 1 - (3/4)^4.
  CHECK(nearest_neighbor_cdf(AngleRadians(kPi / 3.0), 5) ==
        doctest::Approx(0.68359375).epsilon(1e-12));
}

TEST_CASE("count guards") {
  CHECK_THROWS_AS(contact_angle_cdf(AngleRadians(1.0), 0), Error);
  CHECK_THROWS_AS(nearest_neighbor_cdf(AngleRadians(1.0), 1), Error);
  CHECK_THROWS_AS(expected_nn_angle(1), Error);
  CHECK_THROWS_AS(tammes_approx_dopt(1, 1.0), Error);
  CHECK_THROWS_AS(AngleRadians(-0.1), Error);
  CHECK_THROWS_AS(AngleRadians(kPi + 0.1), Error);
}

TEST_CASE("expected nearest-neighbor angle small cases") {
  CHECK(expected_nn_angle(2).value() ==
        doctest::Approx(kPi / 2.0).epsilon(1e-15));
  // (1/2)(3/4) * pi
  CHECK(expected_nn_angle(3).value() ==
        doctest::Approx(3.0 * kPi / 8.0).epsilon(1e-15));
}

TEST_CASE("log-space product matches the naive product for n <= 50") {
  for (std::int64_t n = 2; n <= 50; ++n) {
    double naive = 1.0;
    for (std::int64_t i = 1; i < n; ++i)
      naive *= (2.0 * i - 1.0) / (2.0 * i);
    CHECK(expected_nn_angle(n).value() ==
          doctest::Approx(kPi * naive).epsilon(1e-12));
  }
}

TEST_CASE("expected angle is strictly decreasing in n") {
  double prev = expected_nn_angle(2).value();
  for (std::int64_t n = 3; n <= 300; ++n) {
    const double cur = expected_nn_angle(n).value();
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("large-n evaluation stays finite and tracks the asymptote") {
  const std::int64_t n = 1000000;
  const double v = expected_nn_angle(n).value();
  CHECK(std::isfinite(v));
  CHECK(v > 0.0);
  const double asymptote = kPi / std::sqrt(kPi * static_cast<double>(n - 1));
  CHECK(std::abs(v - asymptote) / asymptote < 1e-4);
}

TEST_CASE("packing approximation: two points give the diameter") {
  CHECK(tammes_approx_dopt(2, 6371.0) ==
        doctest::Approx(2.0 * 6371.0).epsilon(1e-12));
}

TEST_CASE("packing approximation vs the three-point optimum") {
  // True optimum: equilateral triangle on a great circle, sqrt(3)*R.
  const double r = 1.0;
  const double approx = tammes_approx_dopt(3, r);
  CHECK(approx == doctest::Approx(2.0 * std::sin(3.0 * kPi / 8.0)).epsilon(1e-12));
  const double true_opt = std::sqrt(3.0) * r;
  const double excess = approx / true_opt - 1.0;
  CHECK(excess > 0.06);
  CHECK(excess < 0.075);
}

TEST_CASE("packing approximation vs the four-point optimum") {
  // True optimum: regular tetrahedron, sqrt(8/3)*R.
  const double r = 2.5;
  const double approx = tammes_approx_dopt(4, r);
  CHECK(approx ==
        doctest::Approx(2.0 * r * std::sin(5.0 * kPi / 16.0)).epsilon(1e-12));
  const double true_opt = std::sqrt(8.0 / 3.0) * r;
  CHECK(approx > true_opt);
  CHECK(approx / true_opt < 1.03);
}

TEST_CASE("Monte Carlo nearest-neighbor angle matches the expectation") {
  // Mean of the first point's nearest-neighbor angle over seeded draws of
  // 100 uniform points; the closed form is exact for this law.
  const std::int64_t n = 100;
  const int draws = 10000;
  RandomStream rng(421);
  std::vector<double> angles;
  angles.reserve(draws);
  for (int t = 0; t < draws; ++t) {
    const auto cfg = gen_bpp(static_cast<int>(n), 1.0, rng);
    const CartesianPoint ref = to_cartesian(cfg.points()[0]);
    double best_dot = -2.0;
    for (std::size_t i = 1; i < cfg.size(); ++i) {
      const CartesianPoint c = to_cartesian(cfg.points()[i]);
      best_dot = std::max(best_dot,
                          ref.x_km * c.x_km + ref.y_km * c.y_km +
                              ref.z_km * c.z_km);
    }
    angles.push_back(std::acos(std::clamp(best_dot, -1.0, 1.0)));
  }
  double mean = 0.0;
  for (double a : angles) mean += a;
  mean /= draws;
  double var = 0.0;
  for (double a : angles) var += (a - mean) * (a - mean);
  const double se = std::sqrt(var / (draws - 1)) / std::sqrt(double(draws));
  CHECK(std::abs(mean - expected_nn_angle(n).value()) <= 3.0 * se);
}
