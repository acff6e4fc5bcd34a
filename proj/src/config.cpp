#include "rpvt/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace rpvt {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::parse_string(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("config line " + std::to_string(lineno) + ": unterminated section");
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) {
      throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    }
    const std::string full = section.empty() ? key : section + "." + key;
    cfg.values_[full] = trim(line.substr(eq + 1));
  }
  return cfg;
}

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str());
}

const std::string& Config::require(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing config key: " + key);
  return it->second;
}

std::string Config::get_or(const std::string& key, const std::string& fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

long long Config::require_int(const std::string& key) const {
  const std::string& s = require(key);
  long long v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw ConfigError("config key " + key + ": not an integer: " + s);
  }
  return v;
}

long long Config::int_or(const std::string& key, long long fallback) const {
  return has(key) ? require_int(key) : fallback;
}

double Config::require_real(const std::string& key) const {
  const std::string& s = require(key);
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config key " + key + ": not a number: " + s);
  }
}

double Config::real_or(const std::string& key, double fallback) const {
  return has(key) ? require_real(key) : fallback;
}

std::uint64_t Config::u64_or(const std::string& key, std::uint64_t fallback) const {
  if (!has(key)) return fallback;
  const std::string& s = require(key);
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw ConfigError("config key " + key + ": not a u64: " + s);
  }
  return v;
}

std::vector<long long> Config::int_list(const std::string& key) const {
  const std::string& s = require(key);
  std::vector<long long> out;
  std::string token;
  for (char c : s + ",") {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!token.empty()) {
        long long v = 0;
        const auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || p != token.data() + token.size()) {
          throw ConfigError("config key " + key + ": bad list element: " + token);
        }
        out.push_back(v);
        token.clear();
      }
    } else {
      token.push_back(c);
    }
  }
  return out;
}

std::string Config::serialize() const {
  std::ostringstream out;
  // sectionless keys first (a section header would capture them on re-parse)
  for (const auto& [full, value] : values_) {
    if (full.find('.') == std::string::npos) out << full << "=" << value << "\n";
  }
  std::string section;
  for (const auto& [full, value] : values_) {
    const auto dot = full.find('.');
    if (dot == std::string::npos) continue;
    const std::string sec = full.substr(0, dot);
    if (sec != section) {
      out << "\n[" << sec << "]\n";
      section = sec;
    }
    out << full.substr(dot + 1) << "=" << value << "\n";
  }
  return out.str();
}

}  // namespace rpvt
