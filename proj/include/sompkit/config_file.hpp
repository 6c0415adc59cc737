#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sompkit/errors.hpp"

namespace sompkit::configfile {

/// Sectioned key-value text:
///   - lines starting with '#' (after whitespace) and blank lines are ignored
///   - "[section]" opens a section; "key = value" entries belong to it
///   - duplicate keys within a section are errors
/// Readers mark keys as consumed; finish() rejects anything left over, so
/// typos never pass silently.
class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text, const std::string& origin);

  bool has(const std::string& section, const std::string& key) const;
  std::vector<std::string> sections() const;

  std::string get_string(const std::string& section, const std::string& key);
  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback);
  double get_double(const std::string& section, const std::string& key);
  double get_double(const std::string& section, const std::string& key, double fallback);
  long get_int(const std::string& section, const std::string& key);
  long get_int(const std::string& section, const std::string& key, long fallback);
  std::uint64_t get_u64(const std::string& section, const std::string& key,
                        std::uint64_t fallback);
  bool get_bool(const std::string& section, const std::string& key, bool fallback);

  /// Throws config_error naming every key that no reader consumed.
  void finish() const;

 private:
  struct Entry {
    std::string value;
    int line = 0;
    mutable bool consumed = false;
  };
  std::string origin_;
  std::map<std::string, std::map<std::string, Entry>> data_;

  const Entry* find(const std::string& section, const std::string& key) const;
  const Entry& require(const std::string& section, const std::string& key);
};

/// "start:step:end" (inclusive, fp-tolerant) or a comma-separated list.
std::vector<double> parse_grid(const std::string& text);

}  // namespace sompkit::configfile
