#include "gaugeflow/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gaugeflow {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

[[noreturn]] void parse_fail(const std::string& what, int line) {
  throw ConfigParse(what + " (line " + std::to_string(line) + ")");
}

[[noreturn]] void value_fail(const std::string& key, const std::string& what,
                             int line) {
  throw ConfigValue("key '" + key + "': " + what + " (line " +
                    std::to_string(line) + ")");
}

double parse_real(const std::string& key, const std::string& text, int line) {
  const std::string t = trim(text);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size())
    parse_fail("key '" + key + "': malformed real '" + t + "'", line);
  if (!std::isfinite(v)) value_fail(key, "value must be finite", line);
  return v;
}

Point2 parse_pair(const std::string& key, const std::string& text, int line) {
  std::string t = trim(text);
  for (char& c : t)
    if (c == ',') c = ' ';
  std::istringstream in(t);
  double x = 0.0, y = 0.0;
  std::string rest;
  if (!(in >> x >> y) || (in >> rest))
    parse_fail("key '" + key + "': expected a pair of reals", line);
  if (!std::isfinite(x) || !std::isfinite(y))
    value_fail(key, "coordinates must be finite", line);
  return {x, y};
}

int parse_count(const std::string& key, const std::string& text, int line,
                int min_value) {
  const std::string t = trim(text);
  char* end = nullptr;
  const long v = std::strtol(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size())
    parse_fail("key '" + key + "': malformed integer '" + t + "'", line);
  if (v < min_value)
    value_fail(key, "must be >= " + std::to_string(min_value), line);
  return static_cast<int>(v);
}

std::uint64_t parse_seed(const std::string& key, const std::string& text,
                         int line) {
  const std::string t = trim(text);
  char* end = nullptr;
  const unsigned long long v = std::strtoull(t.c_str(), &end, 10);
  if (t.empty() || t[0] == '-' || end != t.c_str() + t.size())
    parse_fail("key '" + key + "': malformed seed '" + t + "'", line);
  return v;
}

bool parse_bool(const std::string& key, const std::string& text, int line) {
  const std::string t = trim(text);
  if (t == "true") return true;
  if (t == "false") return false;
  parse_fail("key '" + key + "': expected true or false", line);
}

double parse_positive(const std::string& key, const std::string& text, int line) {
  const double v = parse_real(key, text, line);
  if (!(v > 0.0)) value_fail(key, "must be positive", line);
  return v;
}

}  // namespace

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::string section;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#' || s[0] == ';') continue;
    if (s.front() == '[') {
      if (s.back() != ']') parse_fail("unterminated section header", line);
      section = trim(s.substr(1, s.size() - 2));
      if (section != "geometry" && section != "tolerances" &&
          section != "sampling" && section != "flags")
        parse_fail("unknown section '" + section + "'", line);
      continue;
    }
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos) parse_fail("expected 'key = value'", line);
    const std::string key = trim(s.substr(0, eq));
    const std::string value = s.substr(eq + 1);
    if (section.empty()) parse_fail("key '" + key + "' outside any section", line);

    if (section == "geometry") {
      if (key == "node1") cfg.node1 = parse_pair(key, value, line);
      else if (key == "node2") cfg.node2 = parse_pair(key, value, line);
      else if (key == "rate") cfg.rate = parse_positive(key, value, line);
      else if (key == "b0") cfg.b0 = parse_pair(key, value, line);
      else if (key == "b1") cfg.b1 = parse_pair(key, value, line);
      else if (key == "b2") cfg.b2 = parse_pair(key, value, line);
      else parse_fail("unknown key '" + key + "' in section 'geometry'", line);
    } else if (section == "tolerances") {
      if (key == "eq_tol") cfg.eq_tol = parse_positive(key, value, line);
      else if (key == "witness_tol") cfg.witness_tol = parse_positive(key, value, line);
      else parse_fail("unknown key '" + key + "' in section 'tolerances'", line);
    } else if (section == "sampling") {
      if (key == "t_step") cfg.t_step = parse_positive(key, value, line);
      else if (key == "horizon_periods") cfg.horizon_periods = parse_count(key, value, line, 1);
      else if (key == "phase_grid") cfg.phase_grid = parse_count(key, value, line, 1);
      else if (key == "s_grid") cfg.s_grid = parse_count(key, value, line, 1);
      else if (key == "n_neighbors") cfg.n_neighbors = parse_count(key, value, line, 1);
      else if (key == "seed") cfg.seed = parse_seed(key, value, line);
      else parse_fail("unknown key '" + key + "' in section 'sampling'", line);
    } else {  // flags
      if (key == "allow_asymmetric") cfg.allow_asymmetric = parse_bool(key, value, line);
      else if (key == "single_cycle_contrast") cfg.single_cycle_contrast = parse_bool(key, value, line);
      else parse_fail("unknown key '" + key + "' in section 'flags'", line);
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigParse("cannot open config file '" + path + "'");
  return parse_config(in);
}

CycleSpec spec_from(const RunConfig& cfg) {
  try {
    const StableNodeField f1(cfg.node1, cfg.rate);
    const StableNodeField f2(cfg.node2, cfg.rate);
    return make_spec(f1, f2, cfg.b0, cfg.b1, cfg.b2, cfg.allow_asymmetric);
  } catch (const GeometryInvalid& e) {
    throw GeometryInvalid(std::string("[geometry] ") + e.what());
  } catch (const PeriodMismatch& e) {
    throw PeriodMismatch(std::string("[geometry] ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigValue(std::string("[geometry] ") + e.what());
  }
}

CheckConfig checks_from(const RunConfig& cfg) {
  CheckConfig c;
  c.eq_tol = cfg.eq_tol;
  c.witness_tol = cfg.witness_tol;
  c.t_step = cfg.t_step;
  c.horizon_periods = cfg.horizon_periods;
  c.phase_grid = cfg.phase_grid;
  c.s_grid = cfg.s_grid;
  c.n_neighbors = cfg.n_neighbors;
  c.seed = cfg.seed;
  c.single_cycle = cfg.single_cycle_contrast;
  return c;
}

}  // namespace gaugeflow
