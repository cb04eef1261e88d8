#include "constel/geometry.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>

#include "constel/error.hpp"
#include "json.hpp"

namespace constel {

double canonical_azimuth(double azimuth_rad) {
  double a = std::fmod(azimuth_rad, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;  // fmod can land on 2*pi after the correction
  return a;
}

std::string_view to_string(ModelLabel label) {
  switch (label) {
    case ModelLabel::Bpp: return "bpp";
    case ModelLabel::Nbpp: return "nbpp";
    case ModelLabel::Fibonacci: return "fibonacci";
    case ModelLabel::OrbitPaper: return "orbit-paper";
    case ModelLabel::OrbitReconciled: return "orbit-reconciled";
    case ModelLabel::OrbitTrackOracle: return "orbit-track-oracle";
  }
  return "unknown";
}

std::optional<ModelLabel> model_label_from_string(std::string_view name) {
  if (name == "bpp") return ModelLabel::Bpp;
  if (name == "nbpp") return ModelLabel::Nbpp;
  if (name == "fibonacci") return ModelLabel::Fibonacci;
  if (name == "orbit-paper") return ModelLabel::OrbitPaper;
  if (name == "orbit" || name == "orbit-reconciled")
    return ModelLabel::OrbitReconciled;
  if (name == "orbit-track-oracle") return ModelLabel::OrbitTrackOracle;
  return std::nullopt;
}

SphericalPoint::SphericalPoint(double radius_km, double polar_rad,
                               double azimuth_rad)
    : radius_km(radius_km),
      polar_rad(polar_rad),
      azimuth_rad(canonical_azimuth(azimuth_rad)) {
  if (!(radius_km > 0.0) || !std::isfinite(radius_km))
    fail(errc::invalid_point, "point radius must be positive and finite");
  if (!(polar_rad >= 0.0 && polar_rad <= kPi))
    fail(errc::invalid_point, "polar angle must lie in [0, pi]");
}

PointConfiguration::PointConfiguration(double radius_km,
                                       std::vector<SphericalPoint> points,
                                       ModelLabel label)
    : radius_km_(radius_km), points_(std::move(points)), label_(label) {
  if (points_.empty())
    fail(errc::insufficient_points, "a configuration needs at least 1 point");
  for (const auto& p : points_) {
    if (p.radius_km != radius_km_)
      fail(errc::radius_mismatch,
           "all points of a configuration must share its radius");
  }
}

double chord_distance(const SphericalPoint& a, const SphericalPoint& b) {
  if (a.radius_km != b.radius_km)
    fail(errc::radius_mismatch, "chord_distance requires equal radii");
  // Identical coordinates give exactly zero; the trig route below would
  // leave sqrt(eps)-sized residue.
  if (a.polar_rad == b.polar_rad && a.azimuth_rad == b.azimuth_rad)
    return 0.0;
  const double c =
      1.0 - std::cos(a.polar_rad) * std::cos(b.polar_rad) -
      std::sin(a.polar_rad) * std::sin(b.polar_rad) *
          std::cos(a.azimuth_rad - b.azimuth_rad);
  return a.radius_km * std::sqrt(std::max(0.0, 2.0 * c));
}

CartesianPoint to_cartesian(const SphericalPoint& p) {
  const double s = std::sin(p.polar_rad);
  return {p.radius_km * s * std::cos(p.azimuth_rad),
          p.radius_km * s * std::sin(p.azimuth_rad),
          p.radius_km * std::cos(p.polar_rad)};
}

SphericalPoint from_cartesian(const CartesianPoint& c) {
  const double r = std::sqrt(c.x_km * c.x_km + c.y_km * c.y_km + c.z_km * c.z_km);
  if (!(r > 0.0) || !std::isfinite(r))
    fail(errc::invalid_point, "cannot convert the origin or non-finite point");
  const double polar = std::acos(std::clamp(c.z_km / r, -1.0, 1.0));
  return SphericalPoint(r, polar, std::atan2(c.y_km, c.x_km));
}

double min_pairwise_distance(const PointConfiguration& cfg) {
  const auto& pts = cfg.points();
  const std::size_t n = pts.size();
  if (n < 2)
    fail(errc::insufficient_points,
         "min_pairwise_distance needs at least 2 points");
  // Chord distances via precomputed Cartesian coordinates; agrees with the
  // angular form to within 1e-9*R (covered by the metric-sanity tests).
  std::vector<CartesianPoint> c;
  c.reserve(n);
  for (const auto& p : pts) c.push_back(to_cartesian(p));
  double best2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = c[i].x_km - c[j].x_km;
      const double dy = c[i].y_km - c[j].y_km;
      const double dz = c[i].z_km - c[j].z_km;
      best2 = std::min(best2, dx * dx + dy * dy + dz * dz);
    }
  }
  return std::sqrt(best2);
}

std::string format_double(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  (void)ec;
  return std::string(buf, ptr);
}

std::string to_csv(const PointConfiguration& cfg) {
  std::string out = "index,radius_km,polar_rad,azimuth_rad\n";
  const auto& pts = cfg.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += format_double(pts[i].radius_km);
    out += ',';
    out += format_double(pts[i].polar_rad);
    out += ',';
    out += format_double(pts[i].azimuth_rad);
    out += '\n';
  }
  return out;
}

namespace {

double parse_field(std::string_view field, std::size_t line_no) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size())
    fail(errc::config_parse, "CSV line " + std::to_string(line_no) +
                                 ": bad numeric field '" + std::string(field) +
                                 "'");
  return v;
}

}  // namespace

PointConfiguration configuration_from_csv(std::string_view csv,
                                          ModelLabel label) {
  std::vector<SphericalPoint> pts;
  double radius = 0.0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t end = csv.find('\n', pos);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view line = csv.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != "index,radius_km,polar_rad,azimuth_rad")
        fail(errc::config_parse, "CSV line 1: unexpected header");
      continue;
    }
    std::array<std::string_view, 4> fields;
    std::size_t f = 0, start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == ',') {
        if (f >= fields.size())
          fail(errc::config_parse,
               "CSV line " + std::to_string(line_no) + ": too many fields");
        fields[f++] = line.substr(start, i - start);
        start = i + 1;
      }
    }
    if (f != 4)
      fail(errc::config_parse,
           "CSV line " + std::to_string(line_no) + ": expected 4 fields");
    radius = parse_field(fields[1], line_no);
    pts.emplace_back(radius, parse_field(fields[2], line_no),
                     parse_field(fields[3], line_no));
  }
  if (pts.empty())
    fail(errc::config_parse, "CSV contains no point rows");
  return PointConfiguration(radius, std::move(pts), label);
}

std::string to_json(const PointConfiguration& cfg) {
  nlohmann::json arr = nlohmann::json::array();
  const auto& pts = cfg.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    arr.push_back({{"index", i},
                   {"radius_km", pts[i].radius_km},
                   {"polar_rad", pts[i].polar_rad},
                   {"azimuth_rad", pts[i].azimuth_rad}});
  }
  return arr.dump(2);
}

}  // namespace constel
