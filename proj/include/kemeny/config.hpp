#pragma once

// key = value settings files ('#' starts a comment).

#include <fstream>
#include <map>
#include <string>

#include "kemeny/errors.hpp"

namespace kemeny {

class Settings {
 public:
  static Settings parse(std::istream& in) {
    Settings s;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw ParseError("settings line " + std::to_string(lineno) + ": expected key = value");
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty() || value.empty()) throw ParseError("settings line " + std::to_string(lineno) + ": empty key or value");
      s.values_[key] = value;
    }
    return s;
  }

  static Settings load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open settings file " + path);
    return parse(in);
  }

  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  bool has(const std::string& key) const { return values_.count(key) != 0; }

  double number(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw ParseError("missing setting " + key);
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(it->second, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != it->second.size()) throw ParseError("setting " + key + " is not a number: " + it->second);
    return x;
  }

  double number(const std::string& key, double fallback) const { return has(key) ? number(key) : fallback; }

  const std::map<std::string, std::string>& values() const { return values_; }

 private:
  static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
  }

  std::map<std::string, std::string> values_;
};

}  // namespace kemeny
