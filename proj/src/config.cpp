#include "constel/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "constel/error.hpp"

namespace constel {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  fail(errc::config_parse, "config line " + std::to_string(line) + ": " + msg);
}

[[noreturn]] void key_fail(const std::string& key, const std::string& msg) {
  fail(errc::config_invalid, "config key '" + key + "': " + msg);
}

struct RawEntry {
  std::string key;
  std::vector<std::string> values;  // list entries, or a single scalar
  bool was_list = false;
  std::size_t line = 0;
};

std::vector<RawEntry> tokenize(std::string_view text) {
  std::vector<RawEntry> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) {
      if (pos > text.size()) break;
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      parse_fail(line_no, "expected 'key = value'");
    RawEntry e;
    e.key = std::string(trim(line.substr(0, eq)));
    e.line = line_no;
    std::string_view value = trim(line.substr(eq + 1));
    if (e.key.empty()) parse_fail(line_no, "empty key");
    if (value.empty()) parse_fail(line_no, "empty value");
    if (value.front() == '[') {
      if (value.back() != ']') parse_fail(line_no, "unterminated list");
      e.was_list = true;
      value = value.substr(1, value.size() - 2);
      std::size_t start = 0;
      while (start <= value.size()) {
        std::size_t comma = value.find(',', start);
        if (comma == std::string_view::npos) comma = value.size();
        std::string_view item = trim(value.substr(start, comma - start));
        if (!item.empty()) e.values.emplace_back(item);
        start = comma + 1;
        if (comma == value.size()) break;
      }
      if (e.values.empty()) parse_fail(line_no, "empty list");
    } else {
      e.values.emplace_back(value);
    }
    entries.push_back(std::move(e));
    if (pos > text.size()) break;
  }
  return entries;
}

double parse_number(const RawEntry& e, const std::string& item) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
  if (ec != std::errc() || ptr != item.data() + item.size())
    parse_fail(e.line, "'" + item + "' is not a number");
  return v;
}

long long parse_integer(const RawEntry& e, const std::string& item) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
  if (ec != std::errc() || ptr != item.data() + item.size())
    parse_fail(e.line, "'" + item + "' is not an integer");
  return v;
}

OrbitGrid parse_grid(const RawEntry& e, const std::string& item) {
  const std::size_t x = item.find('x');
  if (x == std::string::npos)
    parse_fail(e.line, "orbit grid '" + item + "' must look like 72x22");
  OrbitGrid g;
  g.orbits = static_cast<int>(parse_integer(e, item.substr(0, x)));
  g.sats = static_cast<int>(parse_integer(e, item.substr(x + 1)));
  return g;
}

ModelLabel parse_model(const RawEntry& e) {
  const auto label = model_label_from_string(e.values.front());
  if (!label) parse_fail(e.line, "unknown model '" + e.values.front() + "'");
  return *label;
}

}  // namespace

ExperimentConfig parse_config(std::string_view text) {
  const std::vector<RawEntry> entries = tokenize(text);

  ExperimentConfig cfg;
  bool have_preset = false;
  // Preset must be applied first so later keys can override it.
  for (const RawEntry& e : entries) {
    if (e.key != "preset") continue;
    if (have_preset) key_fail("preset", "given more than once");
    cfg = figure_preset(e.values.front());
    have_preset = true;
  }
  if (!have_preset) cfg.curves.emplace_back();
  const bool multi_curve = cfg.curves.size() > 1;

  auto curve_key = [&](const RawEntry& e) -> CurveConfig& {
    if (multi_curve)
      key_fail(e.key, "cannot override curves of the multi-curve preset '" +
                          cfg.name + "'");
    return cfg.curves.front();
  };

  bool saw_gamma_deg = false, saw_gamma_rad = false;
  std::optional<OrbitMode> orbit_mode;
  for (const RawEntry& e : entries) {
    const std::string& v = e.values.front();
    if (e.key == "preset") {
      continue;
    } else if (e.key == "name") {
      cfg.name = v;
    } else if (e.key == "kind") {
      if (v == "distance")
        cfg.kind = ExperimentKind::Distance;
      else if (v == "tammes")
        cfg.kind = ExperimentKind::TammesComparison;
      else
        parse_fail(e.line, "kind must be distance or tammes");
    } else if (e.key == "source_model") {
      curve_key(e).source = parse_model(e);
    } else if (e.key == "target_model") {
      curve_key(e).target = parse_model(e);
    } else if (e.key == "n_points") {
      auto& c = curve_key(e);
      c.n_points.clear();
      for (const auto& item : e.values)
        c.n_points.push_back(static_cast<int>(parse_integer(e, item)));
    } else if (e.key == "orbit_grids") {
      auto& c = curve_key(e);
      c.orbit_grids.clear();
      for (const auto& item : e.values)
        c.orbit_grids.push_back(parse_grid(e, item));
    } else if (e.key == "altitude_km") {
      auto& c = curve_key(e);
      c.altitude_km.clear();
      for (const auto& item : e.values)
        c.altitude_km.push_back(parse_number(e, item));
    } else if (e.key == "gamma_deg") {
      saw_gamma_deg = true;
      auto& c = curve_key(e);
      c.gamma_deg.clear();
      for (const auto& item : e.values)
        c.gamma_deg.push_back(parse_number(e, item));
    } else if (e.key == "gamma_rad") {
      saw_gamma_rad = true;
      auto& c = curve_key(e);
      c.gamma_deg.clear();
      for (const auto& item : e.values)
        c.gamma_deg.push_back(rad_to_deg(parse_number(e, item)));
    } else if (e.key == "sats_per_orbit") {
      curve_key(e).sats_per_orbit = static_cast<int>(parse_integer(e, v));
    } else if (e.key == "gamma_as") {
      const auto mode = gamma_as_from_string(v);
      if (!mode) parse_fail(e.line, "gamma_as must be polar-band or inclination");
      curve_key(e).gamma_as = *mode;
    } else if (e.key == "orbit_mode") {
      const auto mode = orbit_mode_from_string(v);
      if (!mode) parse_fail(e.line, "orbit_mode must be paper or reconciled");
      orbit_mode = *mode;
    } else if (e.key == "n_iterations") {
      cfg.n_iterations = parse_integer(e, v);
    } else if (e.key == "base_seed") {
      std::uint64_t seed = 0;
      auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), seed);
      if (ec != std::errc() || ptr != v.data() + v.size())
        parse_fail(e.line, "'" + v + "' is not an unsigned seed");
      cfg.base_seed = seed;
    } else if (e.key == "solver") {
      const auto solver = solver_from_string(v);
      if (!solver) parse_fail(e.line, "solver must be greedy, exact or both");
      cfg.solver = *solver;
    } else if (e.key == "pooled_aggregation") {
      if (v == "true")
        cfg.pooled_aggregation = true;
      else if (v == "false")
        cfg.pooled_aggregation = false;
      else
        parse_fail(e.line, "pooled_aggregation must be true or false");
    } else {
      fail(errc::config_invalid, "config line " + std::to_string(e.line) +
                                     ": unknown key '" + e.key + "'");
    }
  }

  if (saw_gamma_deg && saw_gamma_rad)
    key_fail("gamma_rad", "conflicts with gamma_deg; set only one");

  if (orbit_mode && !multi_curve) {
    auto remap = [&](ModelLabel label) {
      if (label != ModelLabel::OrbitPaper &&
          label != ModelLabel::OrbitReconciled)
        return label;
      return *orbit_mode == OrbitMode::PaperLiteral
                 ? ModelLabel::OrbitPaper
                 : ModelLabel::OrbitReconciled;
    };
    cfg.curves.front().source = remap(cfg.curves.front().source);
    cfg.curves.front().target = remap(cfg.curves.front().target);
  }

  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    fail(errc::config_parse, "cannot read config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

namespace {

void write_curve(std::ostringstream& out, const CurveConfig& c,
                 bool as_comment) {
  const char* p = as_comment ? "#   " : "";
  out << p << "source_model = " << to_string(c.source) << "\n";
  out << p << "target_model = " << to_string(c.target) << "\n";
  if (!c.n_points.empty()) {
    out << p << "n_points = [";
    for (std::size_t k = 0; k < c.n_points.size(); ++k)
      out << (k ? ", " : "") << c.n_points[k];
    out << "]\n";
  }
  if (!c.orbit_grids.empty()) {
    out << p << "orbit_grids = [";
    for (std::size_t k = 0; k < c.orbit_grids.size(); ++k)
      out << (k ? ", " : "") << c.orbit_grids[k].orbits << "x"
          << c.orbit_grids[k].sats;
    out << "]\n";
  }
  out << p << "altitude_km = [";
  for (std::size_t k = 0; k < c.altitude_km.size(); ++k)
    out << (k ? ", " : "") << format_double(c.altitude_km[k]);
  out << "]\n";
  if (!c.gamma_deg.empty()) {
    out << p << "gamma_deg = [";
    for (std::size_t k = 0; k < c.gamma_deg.size(); ++k)
      out << (k ? ", " : "") << format_double(c.gamma_deg[k]);
    out << "]\n";
    out << p << "gamma_as = " << to_string(c.gamma_as) << "\n";
  }
  if (c.involves_orbit() && c.orbit_grids.empty())
    out << p << "sats_per_orbit = " << c.sats_per_orbit << "\n";
}

}  // namespace

std::string config_to_text(const ExperimentConfig& cfg) {
  std::ostringstream out;
  const bool multi_curve = cfg.curves.size() > 1;
  if (multi_curve) {
    // Multi-curve configurations are only reachable through presets; the
    // curve list below is informational.
    out << "preset = " << cfg.name << "\n";
  } else {
    out << "name = " << cfg.name << "\n";
    out << "kind = "
        << (cfg.kind == ExperimentKind::Distance ? "distance" : "tammes")
        << "\n";
  }
  out << "n_iterations = " << cfg.n_iterations << "\n";
  out << "base_seed = " << cfg.base_seed << "\n";
  out << "solver = " << to_string(cfg.solver) << "\n";
  if (cfg.pooled_aggregation) out << "pooled_aggregation = true\n";
  for (std::size_t i = 0; i < cfg.curves.size(); ++i) {
    if (multi_curve) out << "# curve " << i + 1 << ":\n";
    write_curve(out, cfg.curves[i], multi_curve);
  }
  return out.str();
}

}  // namespace constel
