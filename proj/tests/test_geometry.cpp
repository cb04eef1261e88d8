#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "constel/error.hpp"
#include "constel/geometry.hpp"
#include "constel/random.hpp"

using namespace constel;

namespace {

double cartesian_norm(const CartesianPoint& a, const CartesianPoint& b) {
  const double dx = a.x_km - b.x_km;
  const double dy = a.y_km - b.y_km;
  const double dz = a.z_km - b.z_km;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

SphericalPoint random_point(double radius, RandomStream& rng) {
  return SphericalPoint(radius, std::acos(1.0 - 2.0 * rng.next_unit()),
                        kTwoPi * rng.next_unit());
}

}  // namespace

TEST_CASE("chord distance of antipodal points is the diameter") {
  const double r = 6371.0;
  const SphericalPoint a(r, 0.0, 0.0);
  const SphericalPoint b(r, kPi, 0.0);
  CHECK(chord_distance(a, b) == doctest::Approx(2.0 * r).epsilon(1e-12));
}

TEST_CASE("chord distance of a point to itself is zero") {
  const SphericalPoint a(42.0, 1.234, 5.0);
  CHECK(chord_distance(a, a) == 0.0);
}

TEST_CASE("quarter-turn equatorial chord equals sqrt(2)") {
  const SphericalPoint a(1.0, kPi / 2.0, 0.0);
  const SphericalPoint b(1.0, kPi / 2.0, kPi / 2.0);
  // Independent route: straight-line distance between the Cartesian images.
  const double oracle = cartesian_norm(to_cartesian(a), to_cartesian(b));
  CHECK(chord_distance(a, b) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(chord_distance(a, b) == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("chord distance rejects mismatched radii") {
  const SphericalPoint a(1.0, 0.5, 0.0);
  const SphericalPoint b(2.0, 0.5, 0.0);
  CHECK_THROWS_WITH_AS(chord_distance(a, b),
                       doctest::Contains("equal radii"), Error);
}

TEST_CASE("to_cartesian axis cases") {
  const CartesianPoint pole = to_cartesian(SphericalPoint(5.0, 0.0, 1.0));
  CHECK(pole.x_km == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(pole.y_km == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(pole.z_km == doctest::Approx(5.0));

  const CartesianPoint x = to_cartesian(SphericalPoint(1.0, kPi / 2.0, 0.0));
  CHECK(x.x_km == doctest::Approx(1.0));
  CHECK(std::abs(x.y_km) < 1e-12);

  const CartesianPoint y =
      to_cartesian(SphericalPoint(1.0, kPi / 2.0, kPi / 2.0));
  CHECK(y.y_km == doctest::Approx(1.0));
  CHECK(std::abs(y.x_km) < 1e-12);
}

TEST_CASE("cartesian round-trip stays within 1e-12 of the radius") {
  RandomStream rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const SphericalPoint p = random_point(6371.0, rng);
    const CartesianPoint c = to_cartesian(p);
    const CartesianPoint c2 = to_cartesian(from_cartesian(c));
    CHECK(cartesian_norm(c, c2) <= 1e-12 * p.radius_km);
  }
}

TEST_CASE("metric sanity over random pairs") {
  const double r = 6371.0;
  RandomStream rng(7);
  for (int i = 0; i < 10000; ++i) {
    const SphericalPoint a = random_point(r, rng);
    const SphericalPoint b = random_point(r, rng);
    const double d = chord_distance(a, b);
    CHECK(d == chord_distance(b, a));
    CHECK(d >= 0.0);
    CHECK(d <= 2.0 * r * (1.0 + 1e-12));
    // Agreement with the Cartesian embedding.
    const double oracle = cartesian_norm(to_cartesian(a), to_cartesian(b));
    CHECK(std::abs(d - oracle) <= 1e-9 * r);
  }
}

TEST_CASE("azimuth is canonicalized into [0, 2pi)") {
  CHECK(SphericalPoint(1.0, 1.0, kTwoPi + 0.5).azimuth_rad ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(SphericalPoint(1.0, 1.0, -0.5).azimuth_rad ==
        doctest::Approx(kTwoPi - 0.5).epsilon(1e-12));
  CHECK(SphericalPoint(1.0, 1.0, 17.0 * kPi).azimuth_rad >= 0.0);
  CHECK(SphericalPoint(1.0, 1.0, 17.0 * kPi).azimuth_rad < kTwoPi);
}

TEST_CASE("invalid point components are rejected") {
  CHECK_THROWS_AS(SphericalPoint(0.0, 1.0, 0.0), Error);
  CHECK_THROWS_AS(SphericalPoint(-1.0, 1.0, 0.0), Error);
  CHECK_THROWS_AS(SphericalPoint(1.0, -0.1, 0.0), Error);
  CHECK_THROWS_AS(SphericalPoint(1.0, kPi + 0.1, 0.0), Error);
}

TEST_CASE("min pairwise distance: antipodal pair") {
  const double r = 3.0;
  PointConfiguration cfg(
      r, {SphericalPoint(r, 0.0, 0.0), SphericalPoint(r, kPi, 0.0)},
      ModelLabel::Bpp);
  CHECK(min_pairwise_distance(cfg) == doctest::Approx(2.0 * r).epsilon(1e-12));
}

TEST_CASE("min pairwise distance: equatorial equilateral triangle") {
  const double r = 6371.0;
  PointConfiguration cfg(r,
                         {SphericalPoint(r, kPi / 2.0, 0.0),
                          SphericalPoint(r, kPi / 2.0, 2.0 * kPi / 3.0),
                          SphericalPoint(r, kPi / 2.0, 4.0 * kPi / 3.0)},
                         ModelLabel::Bpp);
  // Direct evaluation of the chord formula at a 120-degree separation.
  CHECK(min_pairwise_distance(cfg) ==
        doctest::Approx(std::sqrt(3.0) * r).epsilon(1e-12));
}

TEST_CASE("min pairwise distance needs two points") {
  PointConfiguration one(1.0, {SphericalPoint(1.0, 1.0, 1.0)},
                         ModelLabel::Bpp);
  CHECK_THROWS_WITH_AS(min_pairwise_distance(one),
                       doctest::Contains("at least 2"), Error);
}

TEST_CASE("configuration invariants") {
  CHECK_THROWS_AS(PointConfiguration(1.0, {}, ModelLabel::Bpp), Error);
  CHECK_THROWS_AS(
      PointConfiguration(
          1.0, {SphericalPoint(1.0, 1.0, 0.0), SphericalPoint(2.0, 1.0, 0.0)},
          ModelLabel::Bpp),
      Error);
}

TEST_CASE("CSV round-trips losslessly") {
  RandomStream rng(99);
  std::vector<SphericalPoint> pts;
  for (int i = 0; i < 64; ++i) pts.push_back(random_point(6921.0, rng));
  const PointConfiguration cfg(6921.0, pts, ModelLabel::Nbpp);
  const std::string csv = to_csv(cfg);
  const PointConfiguration back = configuration_from_csv(csv, cfg.label());
  REQUIRE(back.size() == cfg.size());
  CHECK(back.radius_km() == cfg.radius_km());
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    CHECK(back.points()[i].polar_rad == cfg.points()[i].polar_rad);
    CHECK(back.points()[i].azimuth_rad == cfg.points()[i].azimuth_rad);
  }
  CHECK(to_csv(back) == csv);
}

TEST_CASE("CSV header and row shape") {
  const PointConfiguration cfg(1.0, {SphericalPoint(1.0, 0.25, 0.75)},
                               ModelLabel::Fibonacci);
  const std::string csv = to_csv(cfg);
  CHECK(csv.rfind("index,radius_km,polar_rad,azimuth_rad\n", 0) == 0);
  CHECK(csv.find("0,1,0.25,0.75\n") != std::string::npos);
  CHECK_THROWS_AS(configuration_from_csv("bogus\n", ModelLabel::Bpp), Error);
}

TEST_CASE("JSON array carries the same fields") {
  const PointConfiguration cfg(2.0, {SphericalPoint(2.0, 0.5, 1.5)},
                               ModelLabel::Bpp);
  const std::string json = to_json(cfg);
  CHECK(json.find("\"radius_km\": 2.0") != std::string::npos);
  CHECK(json.find("\"polar_rad\": 0.5") != std::string::npos);
  CHECK(json.find("\"azimuth_rad\": 1.5") != std::string::npos);
}

TEST_CASE("model label names round-trip") {
  for (ModelLabel label :
       {ModelLabel::Bpp, ModelLabel::Nbpp, ModelLabel::Fibonacci,
        ModelLabel::OrbitPaper, ModelLabel::OrbitReconciled,
        ModelLabel::OrbitTrackOracle}) {
    const auto parsed = model_label_from_string(to_string(label));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == label);
  }
  CHECK(model_label_from_string("orbit") == ModelLabel::OrbitReconciled);
  CHECK_FALSE(model_label_from_string("teapot").has_value());
}
