#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "smallgen/cli/config.hpp"
#include "smallgen/exact/real_algebraic.hpp"

namespace smallgen::cli {

constexpr int kDigits = 10;

inline json decimal(const exact::Interval& x) {
  json j = json::object();
  j["decimal"] = x.to_decimal(kDigits);
  return j;
}

inline json decimal(const exact::Interval& x, const std::optional<Rational>& exact_value) {
  json j = decimal(x);
  if (exact_value) j["exact"] = exact::to_string(*exact_value);
  return j;
}

inline json decimal(const Rational& q) {
  return decimal(exact::Interval(q, exact::Interval::kDefaultPrecision), q);
}

inline json decimal(const exact::RealAlgebraic& x) {
  if (x.is_rational()) return decimal(x.lo());
  json j = decimal(x.enclosure());
  j["exact"] = x.to_string();
  return j;
}

/// Interval with its certified endpoints.
inline json enclosure(const exact::Interval& x) {
  json j = decimal(x);
  j["enclosure"] = x.to_string();
  return j;
}

/// Writes to a sibling temporary file, then renames it over the destination.
inline void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path() && !fs::exists(target.parent_path()))
    throw ConfigError("output directory does not exist: " + target.parent_path().string());
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw ConfigError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw ConfigError("cannot move report into place at " + path + ": " + ec.message());
  }
}

class Csv {
 public:
  explicit Csv(std::vector<std::string> header) { row(header); }

  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out_ << ',';
      out_ << quote(cells[i]);
    }
    out_ << '\n';
  }
  std::string str() const { return out_.str(); }

 private:
  static std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }
  std::ostringstream out_;
};

}  // namespace smallgen::cli
