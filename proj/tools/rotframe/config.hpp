#pragma once

// INI-style experiment configuration:
//
//   mode = sagnac
//   units = natural
//   [setup]
//   mass = 1.0
//   omega = 0 0 1
//   [path]
//   vertices = 0 0 0 ; 1 0 0 ; 1 1 0 ; 0 1 0
//
// Scalars, booleans, triples and semicolon-separated vertex lists. Errors
// carry the section.key that failed so the CLI can name the field.

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotqm/vec3.hpp"

namespace rotcli {

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class Config {
 public:
  static Config parse_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file: " + path);
    Config cfg;
    std::string line, section;
    int lineno = 0;
    while (std::getline(is, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']') throw ConfigError("malformed section header at line " + std::to_string(lineno));
        section = trim(line.substr(1, line.size() - 2));
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw ConfigError("expected key = value at line " + std::to_string(lineno));
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty()) throw ConfigError("empty key at line " + std::to_string(lineno));
      cfg.values_[section + "." + key] = value;
    }
    return cfg;
  }

  bool has(const std::string& section, const std::string& key) const {
    return values_.count(section + "." + key) > 0;
  }

  std::string get_string(const std::string& section, const std::string& key) const {
    const auto it = values_.find(section + "." + key);
    if (it == values_.end()) throw ConfigError("missing field " + name(section, key));
    return it->second;
  }

  std::string get_string_or(const std::string& section, const std::string& key,
                            const std::string& fallback) const {
    return has(section, key) ? get_string(section, key) : fallback;
  }

  double get_double(const std::string& section, const std::string& key) const {
    return parse_double(get_string(section, key), name(section, key));
  }

  double get_double_or(const std::string& section, const std::string& key, double fallback) const {
    return has(section, key) ? get_double(section, key) : fallback;
  }

  double get_positive(const std::string& section, const std::string& key) const {
    const double v = get_double(section, key);
    if (!(v > 0.0)) throw ConfigError("field " + name(section, key) + " must be positive");
    return v;
  }

  double get_positive_or(const std::string& section, const std::string& key, double fallback) const {
    return has(section, key) ? get_positive(section, key) : fallback;
  }

  long get_integer_or(const std::string& section, const std::string& key, long fallback) const {
    if (!has(section, key)) return fallback;
    const std::string s = get_string(section, key);
    try {
      std::size_t pos = 0;
      const long v = std::stol(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ConfigError("field " + name(section, key) + " is not an integer: " + s);
    }
  }

  bool get_bool_or(const std::string& section, const std::string& key, bool fallback) const {
    if (!has(section, key)) return fallback;
    const std::string s = get_string(section, key);
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    throw ConfigError("field " + name(section, key) + " is not a boolean: " + s);
  }

  std::vector<double> get_doubles(const std::string& section, const std::string& key) const {
    const std::string s = get_string(section, key);
    std::istringstream ss(s);
    std::vector<double> out;
    std::string tok;
    while (ss >> tok) out.push_back(parse_double(tok, name(section, key)));
    if (out.empty()) throw ConfigError("field " + name(section, key) + " is empty");
    return out;
  }

  rotqm::Vec3 get_vec3(const std::string& section, const std::string& key) const {
    const auto v = get_doubles(section, key);
    if (v.size() != 3) throw ConfigError("field " + name(section, key) + " needs exactly 3 numbers");
    return {v[0], v[1], v[2]};
  }

  rotqm::Vec3 get_vec3_or(const std::string& section, const std::string& key,
                          const rotqm::Vec3& fallback) const {
    return has(section, key) ? get_vec3(section, key) : fallback;
  }

  /// Semicolon-separated list of 3-vectors.
  std::vector<rotqm::Vec3> get_vertices(const std::string& section, const std::string& key) const {
    const std::string s = get_string(section, key);
    std::vector<rotqm::Vec3> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ';')) {
      part = trim(part);
      if (part.empty()) continue;
      std::istringstream ps(part);
      double x, y, z;
      if (!(ps >> x >> y >> z)) throw ConfigError("field " + name(section, key) + ": bad vertex '" + part + "'");
      out.push_back({x, y, z});
    }
    if (out.empty()) throw ConfigError("field " + name(section, key) + " has no vertices");
    return out;
  }

 private:
  static std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
  }

  static std::string name(const std::string& section, const std::string& key) {
    return section.empty() ? key : section + "." + key;
  }

  static double parse_double(const std::string& s, const std::string& field) {
    try {
      std::size_t pos = 0;
      const double v = std::stod(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      if (!std::isfinite(v)) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ConfigError("field " + field + " is not a finite number: " + s);
    }
  }

  std::map<std::string, std::string> values_;
};

}  // namespace rotcli
