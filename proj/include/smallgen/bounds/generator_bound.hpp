#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smallgen/error.hpp"
#include "smallgen/bounds/injectivity.hpp"
#include "smallgen/bounds/spectral.hpp"

namespace smallgen::bounds {

/// An exponent of the form k / s: the numerator k is always exact.
struct Exponent {
  Rational numerator;
  std::optional<Rational> exact;
  Interval value;
};

inline Exponent make_exponent(const Rational& k, const DecayExponent& s) {
  Exponent e{k, std::nullopt, Interval(k, s.value.precision()) / s.value};
  if (s.exact) {
    e.exact = k / *s.exact;
    e.value = Interval(*e.exact, s.value.precision());
  }
  return e;
}

namespace detail {

constexpr long kMaxExactPower = 100000;

/// base^e exactly when base is 1 or e is a (moderate) integer.
inline std::optional<Rational> exact_power(const Rational& base, const std::optional<Rational>& e) {
  if (base == 1) return Rational(1);
  if (!e || !exact::is_integer(*e)) return std::nullopt;
  const auto& n = e->get_num();
  if (abs(n) > kMaxExactPower) return std::nullopt;
  if (base == 0 && n <= 0) return std::nullopt;
  return exact::pow(base, n.get_si());
}

/// base^e for base > 0, with base = 1 exact.
inline Interval power(const Interval& base, const Interval& e) {
  if (base.is_point() && base.contains(Rational(1))) return Interval::from_int(1, base.precision());
  return Interval::pow(base, e);
}

}  // namespace detail

struct TranslateBound {
  Interval value;
  std::optional<Rational> exact;
};

/// c vol^(3/s) delta^(-15/s).
inline TranslateBound translate_bound(const Rational& vol, const DecayExponent& s, const Rational& delta,
                                      const Rational& c) {
  if (vol <= 0) throw DomainError("vol must be positive");
  if (delta <= 0 || delta > 1) throw DomainError("delta must lie in (0, 1]");
  if (c <= 0) throw DomainError("c must be positive");
  const mpfr_prec_t prec = s.value.precision();
  const Exponent ev = make_exponent(3, s);
  const Exponent ed = make_exponent(-15, s);
  TranslateBound t;
  t.value = Interval(c, prec) * detail::power(Interval(vol, prec), ev.value) *
            detail::power(Interval(delta, prec), ed.value);
  const auto pv = detail::exact_power(vol, ev.exact);
  const auto pd = detail::exact_power(delta, ed.exact);
  if (pv && pd) {
    t.exact = c * *pv * *pd;
    t.value = Interval(*t.exact, prec);
  }
  return t;
}

enum class BoundVariant { general, congruence, torsion_free, salem };

inline std::string to_string(BoundVariant v) {
  switch (v) {
    case BoundVariant::general: return "general";
    case BoundVariant::congruence: return "congruence";
    case BoundVariant::torsion_free: return "torsion_free";
    case BoundVariant::salem: return "salem";
  }
  return "?";
}

struct BoundInput {
  unsigned long d = 1;
  Rational vol = 1;
  SpectralData spectral = SpectralData::from_lambda1(Rational(1, 4));
  BoundVariant variant = BoundVariant::general;
  Rational C = 1;
  Rational c = 1;
  std::optional<Rational> m_salem;
};

/// Substituting delta proportional to base^p into delta^(-30/s) gives base^(-30 p / s).
struct SubstitutionCheck {
  std::string base;
  Rational delta_power;
  Rational derived_numerator;
  Rational stated_numerator;
  bool matches = false;
};

struct BoundReport {
  BoundInput input;
  DecayExponent s;
  DeltaConstants delta;
  std::string form;  // symbolic dependence of the bound
  Exponent main_exponent;    // on d, log d or log m_S, per variant
  Exponent vol_exponent;     // 6/s
  Exponent internal_delta_exponent;  // -30/s
  std::optional<Exponent> alternative_exponent;  // torsion free: 120/s on log d
  Interval bound;
  std::optional<Rational> bound_exact;
  std::optional<Interval> alternative_bound;
  Interval internal_bound;  // vol^(6/s) delta^(-30/s)
  SubstitutionCheck substitution;
  std::vector<std::string> notes;
};

inline BoundReport generator_bound(BoundInput in, mpfr_prec_t prec = Interval::kDefaultPrecision) {
  if (in.d < 1) throw DomainError("d must be at least 1");
  if (in.vol <= 0) throw DomainError("vol must be positive");
  if (in.C <= 0 || in.c <= 0) throw DomainError("constants C and c must be positive");
  BoundReport r;
  if (in.variant == BoundVariant::congruence && in.spectral.lambda != SpectralData::congruence_lambda()) {
    if (in.spectral.source != LambdaSource::congruence_default && in.spectral.lambda != Rational(1, 4))
      r.notes.push_back("congruence variant overrides lambda " + exact::to_string(in.spectral.lambda) + " with 975/4096");
    in.spectral = SpectralData::congruence();
  }
  if (in.variant == BoundVariant::salem && (!in.m_salem || *in.m_salem <= 1))
    throw DomainError("Salem variant needs m_S > 1");

  r.s = decay_exponent(in.spectral, prec);
  const DeltaVariant dv = in.variant == BoundVariant::torsion_free ? DeltaVariant::torsion_free
                          : in.variant == BoundVariant::salem      ? DeltaVariant::salem
                                                                   : DeltaVariant::general;
  r.delta = delta_constants(dv, in.d, in.c, in.m_salem, prec);
  if (r.delta.below_delta0 != Decision::yes)
    r.notes.push_back("delta is not certified below delta_0 for this c; choose c <= the safety constant");

  r.vol_exponent = make_exponent(6, r.s);
  r.internal_delta_exponent = make_exponent(-30, r.s);
  const Interval C(in.C, prec);
  const Interval vol(in.vol, prec);
  const Interval vol_part = detail::power(vol, r.vol_exponent.value);
  const auto vol_exact = detail::exact_power(in.vol, r.vol_exponent.exact);

  switch (in.variant) {
    case BoundVariant::general:
    case BoundVariant::congruence: {
      r.form = "C * d^(60/s) * vol^(6/s)";
      r.main_exponent = make_exponent(60, r.s);
      const Rational d(static_cast<long>(in.d));
      r.bound = C * detail::power(Interval(d, prec), r.main_exponent.value) * vol_part;
      const auto dp = detail::exact_power(d, r.main_exponent.exact);
      if (dp && vol_exact) r.bound_exact = in.C * *dp * *vol_exact;
      r.substitution = {"d", Rational(-2), Rational(60), Rational(60), true};
      break;
    }
    case BoundVariant::torsion_free: {
      r.form = "C * log(d)^(180/s) * vol^(6/s)";
      r.main_exponent = make_exponent(180, r.s);
      r.alternative_exponent = make_exponent(120, r.s);
      if (in.d == 1) {
        r.bound = Interval::from_int(0, prec);
        r.bound_exact = Rational(0);
        r.alternative_bound = Interval::from_int(0, prec);
        r.notes.push_back("log(d) = 0 at d = 1: the torsion-free form is degenerate");
      } else {
        const Interval logd = Interval(Rational(static_cast<long>(in.d)), prec).log();
        r.bound = C * Interval::pow(logd, r.main_exponent.value) * vol_part;
        r.alternative_bound = C * Interval::pow(logd, r.alternative_exponent->value) * vol_part;
      }
      r.substitution = {"log(d)", Rational(-4), Rational(120), Rational(180), false};
      r.notes.push_back("delta ~ c log(d)^-4 gives exponent 120/s on log(d); the stated form uses 180/s; both reported");
      break;
    }
    case BoundVariant::salem: {
      r.form = "C * log(m_S)^(-60/s) * vol^(6/s)";
      r.main_exponent = make_exponent(-60, r.s);
      const Interval logm = Interval(*in.m_salem, prec).log();
      r.bound = C * Interval::pow(logm, r.main_exponent.value) * vol_part;
      r.substitution = {"log(m_S)", Rational(2), Rational(-60), Rational(-60), true};
      break;
    }
  }
  r.substitution.derived_numerator = Rational(-30) * r.substitution.delta_power;
  r.substitution.matches = r.substitution.derived_numerator == r.substitution.stated_numerator;
  if (r.bound_exact) r.bound = Interval(*r.bound_exact, prec);

  r.internal_bound = vol_part * Interval::pow(r.delta.delta, r.internal_delta_exponent.value);
  r.input = std::move(in);
  return r;
}

}  // namespace smallgen::bounds
