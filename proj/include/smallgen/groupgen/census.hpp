#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smallgen/bounds/mahler.hpp"
#include "smallgen/bounds/window.hpp"
#include "smallgen/groupgen/enumerate.hpp"

namespace smallgen::groupgen {

struct Violation {
  std::string check;
  Coords coords{};
  std::string element;
  Rational trace = 0;
  std::string detail;
};

/// Both readings of the hyperbolic trace identity for one element, with M = M(x^2 - tr(g^2) x + 1).
struct TraceIdentity {
  Coords coords{};
  Rational trace = 0;
  Interval mahler = Interval::from_int(0);
  Interval half = Interval::from_int(0);     // 2 cosh(1/2 log M)
  Interval quarter = Interval::from_int(0);  // 2 cosh(1/4 log M)
  bool half_matches = false;                 // |tr| inside the enclosure
  bool quarter_matches = false;
};

struct CensusReport {
  unsigned long d = 1;
  std::size_t element_count = 0;
  std::map<Rational, std::size_t> trace_counts;
  std::map<std::string, std::size_t> class_counts;
  std::optional<Rational> min_hyperbolic_abs_trace;
  std::optional<Rational> max_elliptic_abs_trace;
  std::optional<bounds::TraceWindow> window;
  std::optional<bounds::VoutierBound> voutier;
  bool hyperbolic_window_holds = true;  // every hyperbolic |tr| >= upper endpoint
  bool all_traces_integral = true;
  /// |tr| = 2 cosh(t/2) for u = e^t, so M(x^2 - tr(g^2) x + 1) = u^2 pairs with the 1/2 identity.
  std::vector<TraceIdentity> identities;
  bool half_identity_holds = true;
  bool quarter_identity_holds = true;
  std::vector<Violation> violations;
  std::size_t undecided = 0;
};

namespace detail {

inline Violation violation(const std::string& check, const ElementRecord& r, const std::string& detail) {
  return {check, r.coords, r.element.to_string(), r.trace, detail};
}

}  // namespace detail

/// Checks each record against the trace windows:
/// (i) no nontrivial |tr| strictly inside (2 cos(pi/2d), 2 cosh((1/16)(log log 2d / log 2d)^3));
/// (ii) elliptic |tr| <= max{2 cos(pi/m) : phi(2m) <= 4d};
/// (iii) log M(x^2 - tr(g^2) x + 1) >= 1/4 (log log 2d / log 2d)^3 when that bound is positive;
/// (iv) traces integral; (v) elliptic elements have finite order n with phi(n) <= 4d.
/// Parabolic elements contradict cocompactness and are reported as violations.
inline CensusReport trace_census(const std::vector<ElementRecord>& records, unsigned long d,
                                 mpfr_prec_t prec = Interval::kDefaultPrecision) {
  CensusReport rep;
  rep.d = d;
  rep.element_count = records.size();
  if (records.empty()) return rep;
  rep.window = bounds::trace_window(d, prec);
  rep.voutier = bounds::voutier_lower_bound(2 * d, prec);
  const auto& w = *rep.window;
  const exact::RealAlgebraic& elliptic_max = w.elliptic_max.value;
  std::map<Rational, Interval> mahler_cache;  // keyed by tr(g^2)

  for (const auto& r : records) {
    const Rational t = r.trace;
    const Rational at = abs(t);
    ++rep.trace_counts[t];
    ++rep.class_counts[hyp::to_string(r.isometry.kind)];
    if (!exact::is_integer(t)) {
      rep.all_traces_integral = false;
      rep.violations.push_back(detail::violation("integrality", r, "trace " + exact::to_string(t) + " not integral"));
    }
    if (r.isometry.kind == hyp::IsometryKind::central) continue;

    // (i) the window itself
    const exact::RealAlgebraic abs_trace(at);
    const Interval ati(at, prec);
    const bool above_lower = abs_trace > w.lower;
    const Decision below_upper = ati.less_than(w.upper);
    if (above_lower && below_upper == Decision::yes)
      rep.violations.push_back(detail::violation("trace_window", r, "|tr| = " + exact::to_string(at) + " lies in (" +
                                                                        w.lower.enclosure().to_decimal() + ", " +
                                                                        w.upper.to_decimal() + ")"));
    else if (above_lower && below_upper == Decision::undecided)
      ++rep.undecided;

    switch (r.isometry.kind) {
      case hyp::IsometryKind::elliptic: {
        if (!rep.max_elliptic_abs_trace || at > *rep.max_elliptic_abs_trace) rep.max_elliptic_abs_trace = at;
        if (abs_trace > elliptic_max)
          rep.violations.push_back(detail::violation("elliptic_max", r, "|tr| exceeds " + elliptic_max.to_string()));
        if (!r.isometry.order) {
          rep.violations.push_back(detail::violation("elliptic_order", r, "no finite order found"));
        } else if (exact::euler_phi(*r.isometry.order) > 4 * d) {
          rep.violations.push_back(detail::violation(
              "elliptic_order", r, "order " + std::to_string(*r.isometry.order) + " has phi above 4d"));
        }
        break;
      }
      case hyp::IsometryKind::parabolic:
        rep.violations.push_back(detail::violation("parabolic", r, "parabolic element contradicts cocompactness"));
        break;
      case hyp::IsometryKind::hyperbolic: {
        if (!rep.min_hyperbolic_abs_trace || at < *rep.min_hyperbolic_abs_trace) rep.min_hyperbolic_abs_trace = at;
        if (ati.less_than(w.upper) != Decision::no) rep.hyperbolic_window_holds = false;

        // u_{g^2} is the large root of x^2 - tr(g^2) x + 1
        const Rational t2 = t * t - 2;
        auto it = mahler_cache.find(t2);
        if (it == mahler_cache.end()) {
          const exact::IntPolynomial q = exact::IntPolynomial::from_rational(
              exact::RatPolynomial({Rational(1), -t2, Rational(1)}));
          it = mahler_cache.emplace(t2, bounds::mahler_measure(q, 1e-12 * t2.get_d()).with_precision(prec)).first;
        }
        TraceIdentity id;
        id.coords = r.coords;
        id.trace = t;
        id.mahler = it->second;
        const Interval logm = id.mahler.log();
        id.half = Interval::from_int(2, prec) * (logm / Interval::from_int(2, prec)).cosh();
        id.quarter = Interval::from_int(2, prec) * (logm / Interval::from_int(4, prec)).cosh();
        id.half_matches = id.half.contains(at);
        id.quarter_matches = id.quarter.contains(at);
        rep.half_identity_holds = rep.half_identity_holds && id.half_matches;
        rep.quarter_identity_holds = rep.quarter_identity_holds && id.quarter_matches;

        if (rep.voutier->informative && logm.less_than(rep.voutier->value) == Decision::yes)
          rep.violations.push_back(detail::violation("hyperbolic_mahler", r, "log M below the degree-2d lower bound"));
        rep.identities.push_back(std::move(id));
        break;
      }
      case hyp::IsometryKind::central: break;
    }
  }
  return rep;
}

struct InvariantTraceReport {
  std::size_t checked = 0;
  bool all_integral = true;
  std::vector<Rational> square_traces;  // distinct tr(g^2), ascending
  std::vector<Violation> violations;
  /// The traces of squares are rational integers, so they generate Z and the invariant trace
  /// field they span is Q; tr(g) itself has degree at most 2 over it.
  int invariant_field_degree = 1;
  int max_trace_degree = 1;
};

/// tr(g^2) = tr(g)^2 - 2 must be an algebraic integer (over Q: an integer) for every record.
inline InvariantTraceReport invariant_trace_check(const std::vector<ElementRecord>& records) {
  InvariantTraceReport rep;
  std::map<Rational, bool> seen;
  for (const auto& r : records) {
    ++rep.checked;
    const quat::FieldElement t = r.element.trd();
    const quat::FieldElement t2 = t * t - quat::FieldElement(t.field(), Rational(2));
    if (!t2.is_algebraic_integer()) {
      rep.all_integral = false;
      rep.violations.push_back(detail::violation("invariant_trace", r, "tr(g^2) = " + t2.to_string() + " not integral"));
    }
    if (!t2.is_rational()) rep.invariant_field_degree = t.field()->degree();
    if (!t.is_rational()) rep.max_trace_degree = 2;
    seen[t2.rational_part()] = true;
  }
  for (const auto& [v, _] : seen) rep.square_traces.push_back(v);
  return rep;
}

}  // namespace smallgen::groupgen
