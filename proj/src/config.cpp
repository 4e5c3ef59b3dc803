#include "convlab/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "convlab/errors.hpp"

namespace convlab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for '" + key + "': " + value);
  }
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad integer value for '" + key + "': " + value);
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

Scheme parse_scheme(const std::string& value) {
  const auto s = scheme_from_string(value);
  if (!s) throw ConfigError("unknown scheme: " + value);
  return *s;
}

} // namespace

void apply_key(RunConfig& cfg, const std::string& key,
               const std::string& value) {
  if (key == "problem") {
    if (value != "burgers-inviscid" && value != "burgers-viscous" &&
        value != "euler-shock-tube" && value != "swe-dambreak")
      throw ConfigError("unknown problem: " + value);
    cfg.problem = value;
  } else if (key == "scheme") {
    cfg.scheme = parse_scheme(value);
  } else if (key == "schemes") {
    cfg.schemes.clear();
    for (const auto& item : split(value, ','))
      cfg.schemes.push_back(parse_scheme(item));
  } else if (key == "n_cells") {
    cfg.n_cells = parse_int(key, value);
  } else if (key == "theta") {
    cfg.theta = parse_double(key, value);
  } else if (key == "nu") {
    cfg.nu = parse_double(key, value);
  } else if (key == "gamma") {
    cfg.gamma = parse_double(key, value);
  } else if (key == "gravity") {
    cfg.gravity = parse_double(key, value);
  } else if (key == "t_final") {
    cfg.t_final = parse_double(key, value);
  } else if (key == "x_min") {
    cfg.x_min = parse_double(key, value);
  } else if (key == "x_max") {
    cfg.x_max = parse_double(key, value);
  } else if (key == "h_left") {
    cfg.h_left = parse_double(key, value);
  } else if (key == "h_right") {
    cfg.h_right = parse_double(key, value);
  } else if (key == "x0") {
    cfg.x0 = parse_double(key, value);
  } else if (key == "snapshot_times") {
    cfg.snapshot_times.clear();
    for (const auto& item : split(value, ','))
      cfg.snapshot_times.push_back(parse_double(key, item));
  } else if (key == "meshes") {
    cfg.meshes.clear();
    for (const auto& item : split(value, ','))
      cfg.meshes.push_back(parse_int(key, item));
  } else if (key == "eval_time") {
    cfg.eval_time = parse_double(key, value);
  } else if (key == "reference") {
    if (value != "series" && value != "characteristics" && value != "exact" &&
        value != "fou-fine" && value != "none" && value != "default")
      throw ConfigError("unknown reference selector: " + value);
    cfg.reference = value;
  } else if (key == "series_terms") {
    cfg.series_terms = parse_int(key, value);
  } else if (key == "reference_cells") {
    cfg.reference_cells = parse_int(key, value);
  } else if (key == "cache_dir") {
    cfg.cache_dir = value;
  } else {
    throw ConfigError("unknown configuration key: " + key);
  }
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected 'key = value'");
    apply_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

std::string resolve_cache_dir(const RunConfig& cfg) {
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  if (const char* env = std::getenv("CONVLAB_CACHE_DIR"); env && *env)
    return env;
  return ".convlab-cache";
}

} // namespace convlab
