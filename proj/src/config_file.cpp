#include "sompkit/config_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace sompkit::configfile {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_string(buffer.str(), path);
}

Config Config::parse_string(const std::string& text, const std::string& origin) {
  Config config;
  config.origin_ = origin;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    if (stripped.front() == '[') {
      if (stripped.back() != ']') {
        throw config_error(origin + ":" + std::to_string(line_no) + ": unterminated section");
      }
      section = trim(stripped.substr(1, stripped.size() - 2));
      if (section.empty()) {
        throw config_error(origin + ":" + std::to_string(line_no) + ": empty section name");
      }
      config.data_[section];
      continue;
    }
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw config_error(origin + ":" + std::to_string(line_no) + ": expected key = value");
    }
    if (section.empty()) {
      throw config_error(origin + ":" + std::to_string(line_no) +
                         ": key outside of any [section]");
    }
    const std::string key = trim(stripped.substr(0, eq));
    std::string value = trim(stripped.substr(eq + 1));
    const auto comment = value.find('#');
    if (comment != std::string::npos) value = trim(value.substr(0, comment));
    if (key.empty()) {
      throw config_error(origin + ":" + std::to_string(line_no) + ": empty key");
    }
    auto& entries = config.data_[section];
    if (entries.count(key)) {
      throw config_error(origin + ":" + std::to_string(line_no) + ": duplicate key '" +
                         key + "' in [" + section + "]");
    }
    entries[key] = Entry{value, line_no, false};
  }
  return config;
}

bool Config::has(const std::string& section, const std::string& key) const {
  return find(section, key) != nullptr;
}

std::vector<std::string> Config::sections() const {
  std::vector<std::string> names;
  for (const auto& [name, _] : data_) names.push_back(name);
  return names;
}

const Config::Entry* Config::find(const std::string& section, const std::string& key) const {
  const auto sec = data_.find(section);
  if (sec == data_.end()) return nullptr;
  const auto entry = sec->second.find(key);
  if (entry == sec->second.end()) return nullptr;
  return &entry->second;
}

const Config::Entry& Config::require(const std::string& section, const std::string& key) {
  const Entry* entry = find(section, key);
  if (!entry) {
    throw config_error(origin_ + ": missing required key '" + key + "' in [" + section + "]");
  }
  entry->consumed = true;
  return *entry;
}

std::string Config::get_string(const std::string& section, const std::string& key) {
  return require(section, key).value;
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::string& fallback) {
  const Entry* entry = find(section, key);
  if (!entry) return fallback;
  entry->consumed = true;
  return entry->value;
}

double Config::get_double(const std::string& section, const std::string& key) {
  const Entry& entry = require(section, key);
  try {
    std::size_t used = 0;
    const double v = std::stod(entry.value, &used);
    if (used != entry.value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw config_error(origin_ + ":" + std::to_string(entry.line) + ": '" + key +
                       "' is not a number");
  }
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) {
  return has(section, key) ? get_double(section, key) : fallback;
}

long Config::get_int(const std::string& section, const std::string& key) {
  const Entry& entry = require(section, key);
  try {
    std::size_t used = 0;
    const long v = std::stol(entry.value, &used);
    if (used != entry.value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw config_error(origin_ + ":" + std::to_string(entry.line) + ": '" + key +
                       "' is not an integer");
  }
}

long Config::get_int(const std::string& section, const std::string& key, long fallback) {
  return has(section, key) ? get_int(section, key) : fallback;
}

std::uint64_t Config::get_u64(const std::string& section, const std::string& key,
                              std::uint64_t fallback) {
  if (!has(section, key)) return fallback;
  const Entry& entry = require(section, key);
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(entry.value, &used);
    if (used != entry.value.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw config_error(origin_ + ":" + std::to_string(entry.line) + ": '" + key +
                       "' is not an unsigned integer");
  }
}

bool Config::get_bool(const std::string& section, const std::string& key, bool fallback) {
  if (!has(section, key)) return fallback;
  const Entry& entry = require(section, key);
  if (entry.value == "true" || entry.value == "1" || entry.value == "yes") return true;
  if (entry.value == "false" || entry.value == "0" || entry.value == "no") return false;
  throw config_error(origin_ + ":" + std::to_string(entry.line) + ": '" + key +
                     "' is not a boolean");
}

void Config::finish() const {
  std::string leftovers;
  for (const auto& [section, entries] : data_) {
    for (const auto& [key, entry] : entries) {
      if (!entry.consumed) {
        if (!leftovers.empty()) leftovers += ", ";
        leftovers += "[" + section + "] " + key + " (line " + std::to_string(entry.line) + ")";
      }
    }
  }
  if (!leftovers.empty()) {
    throw config_error(origin_ + ": unknown keys: " + leftovers);
  }
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  if (text.find(':') != std::string::npos) {
    double start = 0, step = 0, stop = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> start >> c1 >> step >> c2 >> stop) || c1 != ':' || c2 != ':') {
      throw config_error("bad grid spec '" + text + "' (expected start:step:end)");
    }
    if (!(step > 0.0) || stop < start) {
      throw config_error("bad grid spec '" + text + "': need step > 0 and end >= start");
    }
    const long count = std::lround((stop - start) / step);
    for (long i = 0; i <= count; ++i) {
      const double v = start + static_cast<double>(i) * step;
      if (v > stop + 1e-9 * step) break;
      grid.push_back(v);
    }
  } else {
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
      try {
        grid.push_back(std::stod(token));
      } catch (const std::exception&) {
        throw config_error("bad grid value '" + token + "'");
      }
    }
  }
  if (grid.empty()) throw config_error("empty grid spec '" + text + "'");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw config_error("grid values must be strictly increasing");
    }
  }
  return grid;
}

}  // namespace sompkit::configfile
