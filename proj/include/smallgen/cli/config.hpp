#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "smallgen/error.hpp"
#include "smallgen/exact/interval.hpp"
#include "smallgen/exact/rational.hpp"

namespace smallgen::cli {

using json = nlohmann::ordered_json;
using exact::Rational;

class ConfigError : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class KeyType { integer, rational, boolean, text, choice, polynomial, algebra, places };

struct KeySpec {
  std::string name;
  KeyType type;
  json fallback;  // null: optional without default
  bool required = false;
  std::vector<std::string> choices;
  std::string help;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"bound",        "window",     "mahler",
                                              "salem",        "hilbert",    "enumerate",
                                              "trace-census", "generators", "safety-constant"};
  return names;
}

inline bool uses_algebra(const std::string& command) {
  return command == "enumerate" || command == "trace-census" || command == "generators";
}

inline std::vector<KeySpec> schema(const std::string& command) {
  using K = KeyType;
  const json prec = static_cast<long>(exact::Interval::kDefaultPrecision);
  if (command == "bound")
    return {
        {"d", K::integer, nullptr, true, {}, "degree of the trace field"},
        {"vol", K::rational, nullptr, true, {}, "covolume (given, not computed)"},
        {"vol_note", K::text, nullptr, false, {}, "provenance of vol"},
        {"lambda", K::rational, nullptr, false, {}, "spectral parameter in (0, 1/4]"},
        {"lambda1", K::rational, nullptr, false, {}, "first eigenvalue; clamped to 1/4"},
        {"lambda_preset", K::choice, nullptr, false, {"congruence", "quarter"}, "named lambda"},
        {"variant", K::choice, "general", false, {"general", "congruence", "torsion_free", "salem"}, ""},
        {"C", K::rational, "1", false, {}, "outer constant"},
        {"c", K::rational, "1", false, {}, "delta constant"},
        {"m_S", K::rational, nullptr, false, {}, "Salem number bound for the salem variant"},
        {"precision", K::integer, prec, false, {}, "working precision in bits"},
    };
  if (command == "window")
    return {
        {"d", K::integer, nullptr, true, {}, "degree of the trace field"},
        {"precision", K::integer, prec, false, {}, "working precision in bits"},
    };
  if (command == "mahler")
    return {
        {"polynomial", K::polynomial, nullptr, true, {}, "integer coefficients, constant term first"},
        {"width", K::rational, "1/1000000000000", false, {}, "maximal enclosure width"},
    };
  if (command == "salem")
    return {{"polynomial", K::polynomial, nullptr, true, {}, "integer coefficients, constant term first"}};
  if (command == "hilbert")
    return {
        {"a", K::rational, nullptr, true, {}, ""},
        {"b", K::rational, nullptr, true, {}, ""},
        {"places", K::places, nullptr, false, {}, "extra primes to report"},
    };
  if (command == "safety-constant")
    return {
        {"d_max", K::integer, nullptr, true, {}, "sweep d = 1..d_max"},
        {"exhaustive", K::boolean, false, false, {}, "evaluate every d without block pruning"},
        {"precision", K::integer, 64, false, {}, "working precision in bits"},
    };

  std::vector<KeySpec> k{
      {"algebra", K::algebra, nullptr, true, {}, "quaternion algebra and order"},
      {"projective", K::boolean, true, false, {}, "identify g with -g"},
      {"candidate_budget", K::integer, 100000000, false, {}, "enumeration box budget"},
      {"precision", K::integer, prec, false, {}, "working precision in bits"},
  };
  if (command == "enumerate" || command == "trace-census") {
    k.push_back({"N", K::rational, nullptr, true, {}, "norm cap"});
    if (command == "trace-census") k.push_back({"d", K::integer, nullptr, false, {}, "degree (default: field degree)"});
    return k;
  }
  if (command == "generators") {
    k.push_back({"gen_cap", K::rational, nullptr, true, {}, "norm cap of the generator ball"});
    k.push_back({"target_cap", K::rational, nullptr, true, {}, "norm cap of the target ball"});
    k.push_back({"L", K::integer, 20, false, {}, "word length budget"});
    k.push_back({"greedy", K::boolean, true, false, {}, "greedy reduction before the search"});
    k.push_back({"forward_depth", K::integer, 4, false, {}, "depth of the shared word tree"});
    k.push_back({"node_cap", K::integer, 2000000, false, {}, "size of the shared word tree"});
    k.push_back({"target_node_cap", K::integer, 20000, false, {}, "search size per target"});
    return k;
  }
  throw ConfigError("unknown command '" + command + "'");
}

namespace detail {

inline std::string rational_text(const json& v, const std::string& key) {
  Rational q;
  if (v.is_string()) {
    q = exact::parse_rational(v.get<std::string>());
  } else if (v.is_number_integer()) {
    q = Rational(v.dump(), 10);
  } else {
    throw ConfigError("'" + key + "' must be a rational string such as \"3/2\"");
  }
  return exact::to_string(q);
}

inline json integer_value(const json& v, const std::string& key) {
  if (v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0)) return v.get<unsigned long long>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (!s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) && s.size() < 19)
      return std::stoull(s);
  }
  throw ConfigError("'" + key + "' must be a non-negative integer");
}

inline json polynomial_value(const json& v, const std::string& key) {
  if (!v.is_array() || v.empty()) throw ConfigError("'" + key + "' must be a non-empty array of integers");
  json out = json::array();
  for (const auto& c : v) {
    if (c.is_number_integer()) {
      out.push_back(c);
    } else if (c.is_string()) {
      const exact::BigInt z(c.get<std::string>(), 10);
      out.push_back(z.fits_slong_p() ? json(z.get_si()) : json(z.get_str()));
    } else {
      throw ConfigError("'" + key + "' entries must be integers");
    }
  }
  return out;
}

/// Field elements are a rational string or an array of rational strings (power basis).
inline json field_value(const json& v, const std::string& key) {
  if (v.is_array()) {
    json out = json::array();
    for (const auto& c : v) out.push_back(rational_text(c, key));
    return out;
  }
  return rational_text(v, key);
}

inline json algebra_value(const json& v) {
  if (!v.is_object()) throw ConfigError("'algebra' must be an object");
  static const std::vector<std::string> allowed{"field_minpoly", "place_index", "a", "b", "order_basis"};
  for (const auto& [k, _] : v.items())
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) throw ConfigError("unknown key 'algebra." + k + "'");
  json out = json::object();
  out["field_minpoly"] = v.contains("field_minpoly") ? polynomial_value(v["field_minpoly"], "algebra.field_minpoly")
                                                     : json::array({0, 1});
  out["place_index"] = v.contains("place_index") ? integer_value(v["place_index"], "algebra.place_index") : json(0);
  for (const char* k : {"a", "b"}) {
    if (!v.contains(k)) throw ConfigError(std::string("missing 'algebra.") + k + "'");
    out[k] = field_value(v[k], std::string("algebra.") + k);
  }
  if (v.contains("order_basis")) {
    const auto& m = v["order_basis"];
    if (!m.is_array() || m.size() != 4) throw ConfigError("'algebra.order_basis' must be a 4x4 array");
    json rows = json::array();
    for (const auto& row : m) {
      if (!row.is_array() || row.size() != 4) throw ConfigError("'algebra.order_basis' must be a 4x4 array");
      json r = json::array();
      for (const auto& e : row) r.push_back(field_value(e, "algebra.order_basis"));
      rows.push_back(r);
    }
    out["order_basis"] = rows;
  }
  return out;
}

}  // namespace detail

/// Validates a raw config and returns it in canonical form: known keys only, schema order,
/// defaults filled in, rationals in lowest terms. Top-level "a" and "b" are accepted as
/// shorthand for an algebra over Q.
inline json normalize(const json& raw) {
  if (!raw.is_object()) throw ConfigError("config must be a JSON object");
  if (!raw.contains("command") || !raw["command"].is_string()) throw ConfigError("config needs a 'command' string");
  const std::string command = raw["command"].get<std::string>();
  const auto keys = schema(command);

  json in = raw;
  if (uses_algebra(command) && (in.contains("a") || in.contains("b"))) {
    if (in.contains("algebra") && (in["algebra"].contains("a") || in["algebra"].contains("b")))
      throw ConfigError("'a'/'b' given both at top level and inside 'algebra'");
    json alg = in.value("algebra", json::object());
    if (in.contains("a")) alg["a"] = in["a"];
    if (in.contains("b")) alg["b"] = in["b"];
    in.erase("a");
    in.erase("b");
    in["algebra"] = alg;
  }

  for (const auto& [k, _] : in.items()) {
    if (k == "command") continue;
    if (std::none_of(keys.begin(), keys.end(), [&](const KeySpec& s) { return s.name == k; }))
      throw ConfigError("unknown key '" + k + "' for command '" + command + "'");
  }

  json out = json::object();
  out["command"] = command;
  for (const auto& spec : keys) {
    if (!in.contains(spec.name) || in[spec.name].is_null()) {
      if (spec.required) throw ConfigError("missing required key '" + spec.name + "' for command '" + command + "'");
      if (!spec.fallback.is_null()) out[spec.name] = spec.fallback;
      continue;
    }
    const json& v = in[spec.name];
    switch (spec.type) {
      case KeyType::integer: out[spec.name] = detail::integer_value(v, spec.name); break;
      case KeyType::rational: out[spec.name] = detail::rational_text(v, spec.name); break;
      case KeyType::boolean:
        if (!v.is_boolean()) throw ConfigError("'" + spec.name + "' must be true or false");
        out[spec.name] = v;
        break;
      case KeyType::text:
        if (!v.is_string()) throw ConfigError("'" + spec.name + "' must be a string");
        out[spec.name] = v;
        break;
      case KeyType::choice: {
        if (!v.is_string() || std::find(spec.choices.begin(), spec.choices.end(), v.get<std::string>()) == spec.choices.end()) {
          std::string list;
          for (const auto& c : spec.choices) list += (list.empty() ? "" : ", ") + c;
          throw ConfigError("'" + spec.name + "' must be one of: " + list);
        }
        out[spec.name] = v;
        break;
      }
      case KeyType::polynomial: out[spec.name] = detail::polynomial_value(v, spec.name); break;
      case KeyType::algebra: out[spec.name] = detail::algebra_value(v); break;
      case KeyType::places: {
        if (!v.is_array()) throw ConfigError("'" + spec.name + "' must be an array of primes");
        json ps = json::array();
        for (const auto& p : v) ps.push_back(detail::integer_value(p, spec.name));
        out[spec.name] = ps;
        break;
      }
    }
  }

  if (command == "bound") {
    const int given = static_cast<int>(out.contains("lambda")) + static_cast<int>(out.contains("lambda1")) +
                      static_cast<int>(out.contains("lambda_preset"));
    if (given > 1) throw ConfigError("give at most one of 'lambda', 'lambda1', 'lambda_preset'");
  }
  if (out.contains("precision")) {
    const auto p = out["precision"].get<unsigned long long>();
    if (p < 32 || p > 100000) throw ConfigError("'precision' must lie in [32, 100000] bits");
  }
  return out;
}

}  // namespace smallgen::cli
