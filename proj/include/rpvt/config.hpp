#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rpvt {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat line-oriented key=value config with [section] headers; keys are
/// stored as "section.key" ("" section for keys above the first header).
/// '#' starts a comment; blank lines ignored; no nesting, no quoting.
class Config {
 public:
  static Config parse_string(const std::string& text);
  static Config parse_file(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::string& require(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;

  long long require_int(const std::string& key) const;
  long long int_or(const std::string& key, long long fallback) const;
  double require_real(const std::string& key) const;
  double real_or(const std::string& key, double fallback) const;
  std::uint64_t u64_or(const std::string& key, std::uint64_t fallback) const;

  /// Comma- or whitespace-separated integer list.
  std::vector<long long> int_list(const std::string& key) const;

  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  const std::map<std::string, std::string>& entries() const { return values_; }

  /// Re-emits the config grouped by section, keys sorted (stable round-trip).
  std::string serialize() const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace rpvt
