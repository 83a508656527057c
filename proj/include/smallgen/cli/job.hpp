#pragma once

#include <chrono>
#include <map>
#include <set>
#include <string>

#include <gmp.h>
#include <mpfr.h>

#include "smallgen/bounds/generator_bound.hpp"
#include "smallgen/bounds/mahler.hpp"
#include "smallgen/bounds/salem.hpp"
#include "smallgen/bounds/window.hpp"
#include "smallgen/cli/config.hpp"
#include "smallgen/cli/report.hpp"
#include "smallgen/groupgen/census.hpp"
#include "smallgen/groupgen/generation.hpp"
#include "smallgen/quat/hilbert.hpp"

namespace smallgen::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kViolation = 2, kInconclusive = 3, kBadInput = 4 };

/// Settings that change how a job runs but not what it reports.
struct RunOptions {
  unsigned workers = 1;
  bool timings = false;
};

struct JobOutcome {
  json report;
  std::string csv;  // empty for non-tabular commands
  int exit_code = kOk;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline unsigned long as_ulong(const json& v) { return static_cast<unsigned long>(v.get<unsigned long long>()); }
inline Rational as_rational(const json& v) { return exact::parse_rational(v.get<std::string>()); }
inline mpfr_prec_t precision_of(const json& cfg) { return static_cast<mpfr_prec_t>(cfg["precision"].get<long>()); }

inline exact::IntPolynomial as_polynomial(const json& v) {
  std::vector<exact::BigInt> c;
  for (const auto& e : v) c.emplace_back(e.is_string() ? exact::BigInt(e.get<std::string>(), 10) : exact::BigInt(e.get<long>()));
  return exact::IntPolynomial(std::move(c));
}

inline quat::FieldElement as_field_element(const exact::FieldPtr& k, const json& v) {
  if (!v.is_array()) return quat::FieldElement(k, as_rational(v));
  std::vector<Rational> c;
  for (const auto& e : v) c.push_back(as_rational(e));
  if (c.size() != static_cast<std::size_t>(k->degree()))
    throw ConfigError("field element needs " + std::to_string(k->degree()) + " coordinates");
  return quat::FieldElement(k, std::move(c));
}

inline quat::QuatOrder make_order(const json& alg) {
  const auto minpoly = as_polynomial(alg["field_minpoly"]);
  const std::size_t place = as_ulong(alg["place_index"]);
  exact::FieldPtr k = minpoly.degree() == 1 && minpoly == exact::IntPolynomial({0, 1}) && place == 0
                          ? exact::NumberField::rationals()
                          : std::make_shared<const exact::NumberField>(minpoly, place);
  auto algebra = std::make_shared<const quat::QuatAlgebra>(as_field_element(k, alg["a"]), as_field_element(k, alg["b"]));
  if (!algebra->split_at_distinguished())
    throw ConfigError("algebra " + algebra->to_string() + " is ramified at the distinguished place");
  if (!alg.contains("order_basis")) return quat::QuatOrder::natural(algebra);
  quat::RationalMatrix4 basis{};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const json& e = alg["order_basis"][r][c];
      if (e.is_array()) throw ConfigError("order basis entries must be rational");
      basis[r][c] = as_rational(e);
    }
  return quat::QuatOrder(algebra, basis);
}

inline json exponent(const bounds::Exponent& e) {
  json j = decimal(e.value, e.exact);
  j["numerator"] = exact::to_string(e.numerator);
  return j;
}

inline json window_json(const bounds::TraceWindow& w) {
  json j = json::object();
  j["d"] = w.d;
  j["lower"] = decimal(w.lower);
  j["lower"]["form"] = "2cos(pi/" + std::to_string(2 * w.d) + ")";
  j["upper"] = enclosure(w.upper);
  j["upper_argument"] = decimal(w.upper_argument);
  j["elliptic_trace_max"] = decimal(w.elliptic_max.value);
  j["elliptic_trace_max"]["m"] = w.elliptic_max.m;
  return j;
}

inline json coords_json(const groupgen::Coords& c) { return json::array({c[0], c[1], c[2], c[3]}); }

inline json element_json(const quat::QuatElement& x) {
  json j = json::array();
  for (const auto& v : x.coords()) j.push_back(v.to_string());
  return j;
}

inline json record_json(const groupgen::ElementRecord& r) {
  json j = json::object();
  j["coords"] = coords_json(r.coords);
  j["element"] = element_json(r.element);
  j["norm"] = decimal(r.norm);
  j["trace"] = decimal(r.trace);
  j["class"] = hyp::to_string(r.isometry.kind);
  j["boundary"] = r.boundary;
  j["order"] = r.isometry.order ? json(*r.isometry.order) : json(nullptr);
  j["translation_length"] = r.translation_length ? decimal(*r.translation_length) : json(nullptr);
  return j;
}

inline Csv records_csv(const std::vector<groupgen::ElementRecord>& records) {
  Csv csv({"c0", "c1", "c2", "c3", "x0", "x1", "x2", "x3", "norm", "trace", "class", "boundary", "order",
           "translation_length"});
  for (const auto& r : records) {
    std::vector<std::string> row;
    for (auto v : r.coords) row.push_back(std::to_string(v));
    for (const auto& v : r.element.coords()) row.push_back(v.to_string());
    row.push_back(r.norm.to_decimal(kDigits));
    row.push_back(exact::to_string(r.trace));
    row.push_back(hyp::to_string(r.isometry.kind));
    row.push_back(r.boundary ? "true" : "false");
    row.push_back(r.isometry.order ? std::to_string(*r.isometry.order) : "");
    row.push_back(r.translation_length ? r.translation_length->to_decimal(kDigits) : "");
    csv.row(row);
  }
  return csv;
}

inline json violation_json(const groupgen::Violation& v) {
  json j = json::object();
  j["check"] = v.check;
  j["coords"] = coords_json(v.coords);
  j["element"] = v.element;
  j["trace"] = exact::to_string(v.trace);
  j["detail"] = v.detail;
  return j;
}

struct Context {
  Context(const json& c, const RunOptions& o) : cfg(c), options(o) {}

  const json& cfg;
  const RunOptions& options;
  json results = json::object();
  json violations = json::array();
  json timings = json::object();
  std::string csv;
  bool inconclusive = false;

  template <class F>
  auto timed(const std::string& stage, F&& f) {
    const auto t0 = Clock::now();
    auto out = f();
    timings[stage] = std::chrono::duration<double>(Clock::now() - t0).count();
    return out;
  }
};

inline void run_bound(Context& ctx) {
  const json& cfg = ctx.cfg;
  const mpfr_prec_t prec = precision_of(cfg);
  bounds::BoundInput in;
  in.d = as_ulong(cfg["d"]);
  in.vol = as_rational(cfg["vol"]);
  in.C = as_rational(cfg["C"]);
  in.c = as_rational(cfg["c"]);
  const std::string variant = cfg["variant"];
  in.variant = variant == "congruence"     ? bounds::BoundVariant::congruence
               : variant == "torsion_free" ? bounds::BoundVariant::torsion_free
               : variant == "salem"        ? bounds::BoundVariant::salem
                                           : bounds::BoundVariant::general;
  if (cfg.contains("m_S")) in.m_salem = as_rational(cfg["m_S"]);
  std::vector<std::string> notes;
  if (cfg.contains("lambda")) {
    const Rational lambda = as_rational(cfg["lambda"]);
    if (lambda <= 0 || lambda > Rational(1, 4)) throw ConfigError("'lambda' must lie in (0, 1/4]; use 'lambda1' to clamp");
    in.spectral = {lambda, bounds::LambdaSource::user, std::nullopt};
  } else if (cfg.contains("lambda1")) {
    in.spectral = bounds::SpectralData::from_lambda1(as_rational(cfg["lambda1"]));
  } else if (cfg.value("lambda_preset", "") == "congruence") {
    in.spectral = bounds::SpectralData::congruence();
  } else {
    in.spectral = {Rational(1, 4), bounds::LambdaSource::user, std::nullopt};
    if (!cfg.contains("lambda_preset")) notes.push_back("no spectral input: lambda = 1/4");
  }

  const auto r = bounds::generator_bound(in, prec);
  json& out = ctx.results;
  out["variant"] = variant;
  out["lambda"] = decimal(r.input.spectral.lambda);
  out["lambda"]["source"] = bounds::to_string(r.input.spectral.source);
  if (r.input.spectral.lambda1) out["lambda"]["lambda1"] = exact::to_string(*r.input.spectral.lambda1);
  out["s"] = decimal(r.s.value, r.s.exact);
  out["form"] = r.form;
  out["exponents"] = json::object();
  out["exponents"]["main"] = exponent(r.main_exponent);
  out["exponents"]["vol"] = exponent(r.vol_exponent);
  out["exponents"]["internal_delta"] = exponent(r.internal_delta_exponent);
  if (r.alternative_exponent) out["exponents"]["alternative"] = exponent(*r.alternative_exponent);
  out["bound"] = decimal(r.bound, r.bound_exact);
  if (r.alternative_bound) out["alternative_bound"] = decimal(*r.alternative_bound);
  out["internal_bound"] = decimal(r.internal_bound);
  out["delta"] = json::object();
  out["delta"]["value"] = decimal(r.delta.delta);
  out["delta"]["delta0"] = decimal(r.delta.delta0);
  out["delta"]["below_delta0"] = to_string(r.delta.below_delta0);
  out["substitution"] = json::object();
  out["substitution"]["base"] = r.substitution.base;
  out["substitution"]["delta_power"] = exact::to_string(r.substitution.delta_power);
  out["substitution"]["derived_numerator"] = exact::to_string(r.substitution.derived_numerator);
  out["substitution"]["stated_numerator"] = exact::to_string(r.substitution.stated_numerator);
  out["substitution"]["matches"] = r.substitution.matches;
  out["window"] = window_json(bounds::trace_window(in.d, prec));
  if (cfg.contains("vol_note")) out["vol_note"] = cfg["vol_note"];
  for (const auto& n : r.notes) notes.push_back(n);
  out["notes"] = notes;
}

inline void run_window(Context& ctx) {
  const unsigned long d = as_ulong(ctx.cfg["d"]);
  const mpfr_prec_t prec = precision_of(ctx.cfg);
  json& out = ctx.results;
  out["window"] = window_json(bounds::trace_window(d, prec));
  const auto v = bounds::voutier_lower_bound(2 * d, prec);
  out["voutier"] = decimal(v.value);
  out["voutier"]["n"] = v.n;
  out["voutier"]["informative"] = v.informative;
  const auto dz = bounds::delta_zero_terms(d, prec);
  out["delta0"] = decimal(dz.value);
  out["delta0"]["hyperbolic_term"] = decimal(dz.hyperbolic_term).at("decimal");
  out["delta0"]["elliptic_term"] = decimal(dz.elliptic_term).at("decimal");
}

inline void run_mahler(Context& ctx) {
  const auto p = as_polynomial(ctx.cfg["polynomial"]);
  const double width = as_rational(ctx.cfg["width"]).get_d();
  const auto m = bounds::mahler_measure(p, width);
  json& out = ctx.results;
  out["polynomial"] = ctx.cfg["polynomial"];
  out["measure"] = enclosure(m);
  out["log_measure"] = decimal(m.log());
}

inline void run_salem(Context& ctx) {
  const auto p = as_polynomial(ctx.cfg["polynomial"]);
  const auto r = bounds::is_salem(p);
  json& out = ctx.results;
  out["polynomial"] = ctx.cfg["polynomial"];
  out["is_salem"] = r.is_salem;
  out["theta"] = r.theta ? decimal(*r.theta) : json(nullptr);
  out["note"] = r.note;
}

inline void run_hilbert(Context& ctx) {
  const Rational a = as_rational(ctx.cfg["a"]);
  const Rational b = as_rational(ctx.cfg["b"]);
  if (a == 0 || b == 0) throw ConfigError("'a' and 'b' must be nonzero");
  std::set<exact::BigInt> primes;
  for (const auto& p : quat::prime_factors(2 * abs(a.get_num() * a.get_den() * b.get_num() * b.get_den())))
    primes.insert(p);
  if (ctx.cfg.contains("places"))
    for (const auto& p : ctx.cfg["places"]) primes.insert(quat::Place::finite(exact::BigInt(as_ulong(p))).prime);
  json symbols = json::array();
  int product = 1;
  auto add = [&](const quat::Place& v) {
    const int s = quat::hilbert_symbol(a, b, v);
    product *= s;
    json e = json::object();
    e["place"] = v.to_string();
    e["symbol"] = s;
    symbols.push_back(e);
  };
  for (const auto& p : primes) add(quat::Place{p});
  add(quat::Place::infinity());
  const auto ram = quat::ramification_set(a, b);
  json& out = ctx.results;
  out["a"] = exact::to_string(a);
  out["b"] = exact::to_string(b);
  out["symbols"] = symbols;
  out["product"] = product;
  out["ramification"] = json::array();
  for (const auto& p : ram.finite_places) out["ramification"].push_back(p.get_str());
  if (ram.infinite_ramified) out["ramification"].push_back("inf");
  out["discriminant"] = ram.discriminant().get_str();
  out["division"] = ram.is_division();
  if (product != 1) {
    json v = json::object();
    v["check"] = "product_formula";
    v["detail"] = "product of local symbols is -1";
    ctx.violations.push_back(v);
  }
}

inline groupgen::EnumerationJob enumeration_job(const json& cfg, const Rational& cap, unsigned workers) {
  groupgen::EnumerationJob job;
  job.cap = cap;
  job.projective = cfg["projective"].get<bool>();
  job.workers = workers;
  job.candidate_budget = static_cast<double>(cfg["candidate_budget"].get<unsigned long long>());
  job.precision = precision_of(cfg);
  return job;
}

inline json enumeration_summary(const groupgen::EnumerationResult& e) {
  json j = json::object();
  j["count"] = e.records.size();
  j["boundary_count"] = e.boundary_count;
  j["box"] = json::array({e.box[0], e.box[1], e.box[2], e.box[3]});
  j["solved_index"] = e.solved_index;
  j["candidates"] = static_cast<unsigned long long>(e.candidates);
  return j;
}

inline void run_enumerate(Context& ctx) {
  const auto order = make_order(ctx.cfg["algebra"]);
  const groupgen::UnitGroup g(order);
  const Rational cap = as_rational(ctx.cfg["N"]);
  const auto e = ctx.timed("enumerate", [&] {
    return groupgen::enumerate_unit_ball(g, enumeration_job(ctx.cfg, cap, ctx.options.workers));
  });
  json& out = ctx.results;
  out["algebra"] = g.original_algebra()->to_string();
  out["ramification"] = g.original_algebra()->field()->is_rational_field()
                            ? json(g.original_algebra()->ramification()->to_string())
                            : json(nullptr);
  out["enumeration"] = enumeration_summary(e);
  out["records"] = json::array();
  for (const auto& r : e.records) out["records"].push_back(record_json(r));
  ctx.csv = records_csv(e.records).str();
}

inline void run_census(Context& ctx) {
  const auto order = make_order(ctx.cfg["algebra"]);
  const groupgen::UnitGroup g(order);
  const Rational cap = as_rational(ctx.cfg["N"]);
  const unsigned long d =
      ctx.cfg.contains("d") ? as_ulong(ctx.cfg["d"]) : static_cast<unsigned long>(g.algebra()->field()->degree());
  const mpfr_prec_t prec = precision_of(ctx.cfg);
  const auto e = ctx.timed("enumerate", [&] {
    return groupgen::enumerate_unit_ball(g, enumeration_job(ctx.cfg, cap, ctx.options.workers));
  });
  const auto c = ctx.timed("census", [&] { return groupgen::trace_census(e.records, d, prec); });
  const auto inv = groupgen::invariant_trace_check(e.records);

  json& out = ctx.results;
  out["algebra"] = g.original_algebra()->to_string();
  out["d"] = d;
  out["enumeration"] = enumeration_summary(e);
  out["class_counts"] = json::object();
  for (const auto& [k, v] : c.class_counts) out["class_counts"][k] = v;
  out["trace_counts"] = json::array();
  for (const auto& [t, n] : c.trace_counts) out["trace_counts"].push_back(json::array({exact::to_string(t), n}));
  out["min_hyperbolic_abs_trace"] = c.min_hyperbolic_abs_trace ? json(exact::to_string(*c.min_hyperbolic_abs_trace)) : json(nullptr);
  out["max_elliptic_abs_trace"] = c.max_elliptic_abs_trace ? json(exact::to_string(*c.max_elliptic_abs_trace)) : json(nullptr);
  if (c.window) out["window"] = window_json(*c.window);
  if (c.voutier) {
    out["voutier"] = decimal(c.voutier->value);
    out["voutier"]["n"] = c.voutier->n;
    out["voutier"]["informative"] = c.voutier->informative;
  }
  out["hyperbolic_window_holds"] = c.hyperbolic_window_holds;
  out["all_traces_integral"] = c.all_traces_integral;
  out["undecided"] = c.undecided;

  // one line per distinct |tr|
  json ids = json::array();
  std::set<Rational> seen;
  for (const auto& id : c.identities) {
    const Rational at = abs(id.trace);
    if (!seen.insert(at).second) continue;
    json j = json::object();
    j["abs_trace"] = exact::to_string(at);
    j["mahler"] = decimal(id.mahler);
    j["two_cosh_half_log_m"] = decimal(id.half);
    j["two_cosh_quarter_log_m"] = decimal(id.quarter);
    j["half_matches"] = id.half_matches;
    j["quarter_matches"] = id.quarter_matches;
    ids.push_back(j);
  }
  out["trace_identities"] = json::object();
  out["trace_identities"]["half_holds"] = c.half_identity_holds;
  out["trace_identities"]["quarter_holds"] = c.quarter_identity_holds;
  out["trace_identities"]["by_trace"] = ids;

  out["invariant_trace"] = json::object();
  out["invariant_trace"]["checked"] = inv.checked;
  out["invariant_trace"]["all_integral"] = inv.all_integral;
  out["invariant_trace"]["invariant_field_degree"] = inv.invariant_field_degree;
  out["invariant_trace"]["max_trace_degree"] = inv.max_trace_degree;
  out["invariant_trace"]["square_traces"] = json::array();
  for (const auto& t : inv.square_traces) out["invariant_trace"]["square_traces"].push_back(exact::to_string(t));

  for (const auto& v : c.violations) ctx.violations.push_back(violation_json(v));
  for (const auto& v : inv.violations) ctx.violations.push_back(violation_json(v));
  if (c.undecided > 0) ctx.inconclusive = true;
  ctx.csv = records_csv(e.records).str();
}

inline std::string word_text(const groupgen::Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
  return s;
}

inline void run_generators(Context& ctx) {
  const json& cfg = ctx.cfg;
  const auto order = make_order(cfg["algebra"]);
  const groupgen::UnitGroup g(order);
  const Rational gen_cap = as_rational(cfg["gen_cap"]);
  const Rational target_cap = as_rational(cfg["target_cap"]);
  const bool projective = cfg["projective"].get<bool>();

  const auto gens = ctx.timed("enumerate_generators", [&] {
    return groupgen::enumerate_unit_ball(g, enumeration_job(cfg, gen_cap, ctx.options.workers));
  });
  const auto targets = ctx.timed("enumerate_targets", [&] {
    return groupgen::enumerate_unit_ball(g, enumeration_job(cfg, target_cap, ctx.options.workers));
  });
  std::vector<groupgen::Coords> s;
  for (const auto& r : gens.records)
    if (!g.is_identity(r.coords, projective)) s.push_back(r.coords);
  if (s.empty()) s.push_back(g.identity());

  groupgen::GenerationJob job;
  job.max_length = static_cast<int>(as_ulong(cfg["L"]));
  job.greedy = cfg["greedy"].get<bool>();
  job.projective = projective;
  job.forward_depth = static_cast<int>(as_ulong(cfg["forward_depth"]));
  job.node_cap = as_ulong(cfg["node_cap"]);
  job.target_node_cap = as_ulong(cfg["target_node_cap"]);
  job.workers = ctx.options.workers;
  const auto cert = ctx.timed("certify", [&] {
    return groupgen::verify_generation(g, s, groupgen::coords_of(targets.records), job);
  });

  json& out = ctx.results;
  out["algebra"] = g.original_algebra()->to_string();
  out["generators"] = json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    json j = json::object();
    j["index"] = i + 1;
    j["coords"] = coords_json(s[i]);
    j["element"] = element_json(g.element(s[i]));
    out["generators"].push_back(j);
  }
  out["target_count"] = cert.targets.size();
  out["certified"] = cert.certified;
  out["inconclusive"] = cert.inconclusive;
  out["max_word_length"] = cert.max_word_length;
  out["forward_nodes"] = cert.forward_nodes;
  out["forward_complete_depth"] = cert.forward_complete_depth;
  out["certificates"] = json::array();
  Csv csv({"c0", "c1", "c2", "c3", "status", "length", "method", "word"});
  for (const auto& r : cert.results) {
    json j = json::object();
    j["target"] = coords_json(r.target);
    j["status"] = groupgen::to_string(r.status);
    j["word"] = r.word;
    j["method"] = r.method;
    out["certificates"].push_back(j);
    csv.row({std::to_string(r.target[0]), std::to_string(r.target[1]), std::to_string(r.target[2]),
             std::to_string(r.target[3]), groupgen::to_string(r.status), std::to_string(r.word.size()), r.method,
             word_text(r.word)});
  }
  if (cert.inconclusive > 0) ctx.inconclusive = true;
  ctx.csv = csv.str();
}

inline void run_safety_constant(Context& ctx) {
  const unsigned long d_max = as_ulong(ctx.cfg["d_max"]);
  if (d_max < 1) throw ConfigError("'d_max' must be at least 1");
  const mpfr_prec_t prec = precision_of(ctx.cfg);
  const auto sc = ctx.timed("sweep", [&] {
    return bounds::compute_safety_constant(d_max, ctx.cfg["exhaustive"].get<bool>(), prec);
  });
  json& out = ctx.results;
  out["d_max"] = sc.d_max;
  out["c"] = decimal(sc.c);
  out["minimum"] = decimal(sc.minimum);
  out["argmin"] = sc.argmin;
  out["argmin_unique"] = sc.argmin_unique;
  Csv csv({"d", "d2_delta0"});
  for (unsigned long d = 1; d <= std::min<unsigned long>(d_max, 1000); ++d)
    csv.row({std::to_string(d), bounds::detail::scaled_delta_zero(d, prec).to_decimal(kDigits)});
  ctx.csv = csv.str();
}

inline json versions() {
  json j = json::object();
  j["smallgen"] = kVersion;
  j["gmp"] = gmp_version;
  j["mpfr"] = mpfr_get_version();
  j["json"] = std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." + std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
              std::to_string(NLOHMANN_JSON_VERSION_PATCH);
  return j;
}

}  // namespace detail

/// Runs one job. Bad input raises DomainError (exit code 4 at the command line); budget or
/// precision exhaustion yields a report with exit code 3.
inline JobOutcome run_job(const json& config, const RunOptions& options = {}) {
  const json cfg = normalize(config);
  const std::string command = cfg["command"];
  detail::Context ctx(cfg, options);
  const auto t0 = detail::Clock::now();
  try {
    if (command == "bound") detail::run_bound(ctx);
    else if (command == "window") detail::run_window(ctx);
    else if (command == "mahler") detail::run_mahler(ctx);
    else if (command == "salem") detail::run_salem(ctx);
    else if (command == "hilbert") detail::run_hilbert(ctx);
    else if (command == "enumerate") detail::run_enumerate(ctx);
    else if (command == "trace-census") detail::run_census(ctx);
    else if (command == "generators") detail::run_generators(ctx);
    else if (command == "safety-constant") detail::run_safety_constant(ctx);
  } catch (const PrecisionExhausted& e) {
    ctx.results = json::object({{"error", e.what()}});
    ctx.inconclusive = true;
  } catch (const BudgetExceeded& e) {
    ctx.results = json::object({{"error", e.what()}});
    ctx.inconclusive = true;
  }
  ctx.timings["total"] = std::chrono::duration<double>(detail::Clock::now() - t0).count();

  JobOutcome out;
  out.report = json::object();
  out.report["config"] = cfg;
  out.report["results"] = ctx.results;
  out.report["violations"] = ctx.violations;
  out.report["timings"] = options.timings ? ctx.timings : json::object();
  out.report["versions"] = detail::versions();
  out.csv = ctx.csv;
  out.exit_code = !ctx.violations.empty() ? kViolation : ctx.inconclusive ? kInconclusive : kOk;
  return out;
}

/// Serialized report; identical jobs give identical text.
inline std::string report_text(const json& report) { return report.dump(2) + "\n"; }

}  // namespace smallgen::cli
