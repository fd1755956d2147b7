#include "sgswe/config.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace sgswe {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

double to_double(const std::string& key, const std::string& v) {
  const std::string t = trim(v);
  char* end = nullptr;
  errno = 0;
  const double x = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(x)) {
    throw ConfigError(key, "expected a finite number, got '" + v + "'");
  }
  return x;
}

std::size_t to_count(const std::string& key, const std::string& v) {
  const std::string t = trim(v);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ConfigError(key, "expected a non-negative integer, got '" + v + "'");
  }
  errno = 0;
  const unsigned long long n = std::strtoull(t.c_str(), nullptr, 10);
  if (errno == ERANGE) throw ConfigError(key, "value out of range");
  return static_cast<std::size_t>(n);
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (trim(item).empty()) continue;
    out.push_back(to_double(key, item));
  }
  return out;
}

}  // namespace

std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::DamBreakFlat: return "dam_break_flat";
    case Experiment::StochasticBottom: return "stochastic_bottom";
    case Experiment::LakeAtRestPerturbation: return "lake_at_rest_perturbation";
    case Experiment::SmoothWave: return "smooth_wave";
    case Experiment::Custom: return "custom";
  }
  return "?";
}

Experiment parse_experiment(std::string_view name) {
  const std::string n = lower(trim(name));
  for (Experiment e : {Experiment::DamBreakFlat, Experiment::StochasticBottom, Experiment::LakeAtRestPerturbation,
                       Experiment::SmoothWave, Experiment::Custom}) {
    if (n == to_string(e)) return e;
  }
  throw ConfigError("experiment", "unknown experiment '" + std::string(name) + "'");
}

SchemeConfig defaults_for(Experiment e) {
  SchemeConfig c;
  c.experiment = e;
  switch (e) {
    case Experiment::DamBreakFlat:
    case Experiment::Custom:
      break;
    case Experiment::StochasticBottom:
      c.t_final = 0.8;
      c.snapshot_times = {0.0995, 0.8};
      c.preset_snapshots = true;
      break;
    case Experiment::LakeAtRestPerturbation:
      c.t_final = 0.8;
      break;
    case Experiment::SmoothWave:
      c.x_left = 0.0;
      c.x_right = 1.0;
      c.nx = 200;
      c.t_final = 0.05;
      c.boundary = Boundary::Periodic;
      break;
  }
  return c;
}

void apply_setting(SchemeConfig& c, const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (key == "experiment") {
    c.experiment = parse_experiment(v);
  } else if (key == "scheme") {
    c.scheme = parse_scheme(v);
  } else if (key == "K") {
    c.K = to_count(key, v);
  } else if (key == "nx") {
    c.nx = to_count(key, v);
  } else if (key == "x_left") {
    c.x_left = to_double(key, v);
  } else if (key == "x_right") {
    c.x_right = to_double(key, v);
  } else if (key == "g") {
    c.g = to_double(key, v);
  } else if (key == "cfl") {
    c.cfl = to_double(key, v);
  } else if (key == "t_final") {
    c.t_final = to_double(key, v);
  } else if (key == "snapshot_times") {
    c.snapshot_times = to_list(key, v);
    c.preset_snapshots = false;
  } else if (key == "boundary") {
    const std::string b = lower(v);
    if (b == "outflow") c.boundary = Boundary::Outflow;
    else if (b == "periodic") c.boundary = Boundary::Periodic;
    else throw ConfigError(key, "expected outflow or periodic, got '" + v + "'");
  } else if (key == "output_dir") {
    if (v.empty()) throw ConfigError(key, "must not be empty");
    c.output_dir = v;
  } else if (key == "perturbation_amplitude") {
    c.perturbation_amplitude = to_double(key, v);
  } else if (key == "custom_split") {
    c.custom.split = to_double(key, v);
  } else if (key == "custom_w_left") {
    c.custom.w_left = to_double(key, v);
  } else if (key == "custom_w_right") {
    c.custom.w_right = to_double(key, v);
  } else if (key == "custom_w_left_xi") {
    c.custom.w_left_xi = to_double(key, v);
  } else if (key == "custom_w_right_xi") {
    c.custom.w_right_xi = to_double(key, v);
  } else if (key == "custom_q_left") {
    c.custom.q_left = to_double(key, v);
  } else if (key == "custom_q_right") {
    c.custom.q_right = to_double(key, v);
  } else if (key == "custom_bottom") {
    const std::string b = lower(v);
    if (b == "flat") c.custom.bottom = BottomShape::Flat;
    else if (b == "stochastic_bump") c.custom.bottom = BottomShape::StochasticBump;
    else if (b == "two_bump") c.custom.bottom = BottomShape::TwoBump;
    else throw ConfigError(key, "expected flat, stochastic_bump or two_bump, got '" + v + "'");
  } else {
    throw ConfigError(key, "unknown key");
  }
}

SchemeConfig parse_config(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::map<std::string, int> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("", "line " + std::to_string(lineno) + ": expected key = value");
    }
    std::string key = trim(std::string_view(line).substr(0, eq));
    if (key.empty()) throw ConfigError("", "line " + std::to_string(lineno) + ": missing key");
    if (seen.count(key)) throw ConfigError(key, "given twice (lines " + std::to_string(seen[key]) + " and " +
                                                    std::to_string(lineno) + ")");
    seen[key] = lineno;
    entries.emplace_back(std::move(key), line.substr(eq + 1));
  }

  Experiment e = Experiment::DamBreakFlat;
  for (const auto& [k, v] : entries) {
    if (k == "experiment") e = parse_experiment(v);
  }
  SchemeConfig c = defaults_for(e);
  for (const auto& [k, v] : entries) {
    if (k != "experiment") apply_setting(c, k, v);
  }
  validate(c);
  return c;
}

SchemeConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("config", "cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

void validate(SchemeConfig& c) {
  if (c.K < 1) throw ConfigError("K", "must be at least 1");
  if (c.K > 40) throw ConfigError("K", "must be at most 40");
  if (c.nx < 8) throw ConfigError("nx", "must be at least 8");
  if (!(c.x_right > c.x_left)) throw ConfigError("x_right", "must exceed x_left");
  if (!(c.g > 0.0)) throw ConfigError("g", "must be positive");
  if (!(c.cfl > 0.0)) throw ConfigError("cfl", "must be positive");
  if (!(c.t_final > 0.0)) throw ConfigError("t_final", "must be positive");

  if (c.preset_snapshots) {
    std::erase_if(c.snapshot_times, [&](double t) { return t > c.t_final; });
  }
  for (double t : c.snapshot_times) {
    if (t < 0.0 || t > c.t_final) {
      throw ConfigError("snapshot_times", "time " + std::to_string(t) + " outside [0, t_final]");
    }
  }
  if (c.snapshot_times.empty() || c.snapshot_times.back() != c.t_final) c.snapshot_times.push_back(c.t_final);
  std::sort(c.snapshot_times.begin(), c.snapshot_times.end());
  c.snapshot_times.erase(std::unique(c.snapshot_times.begin(), c.snapshot_times.end()), c.snapshot_times.end());
}

}  // namespace sgswe
