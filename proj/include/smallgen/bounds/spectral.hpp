#pragma once

#include <optional>
#include <string>

#include "smallgen/error.hpp"
#include "smallgen/exact/interval.hpp"
#include "smallgen/exact/rational.hpp"

namespace smallgen::bounds {

using exact::Interval;
using exact::Rational;

enum class LambdaSource { user, congruence_default, min_with_quarter };

inline std::string to_string(LambdaSource s) {
  switch (s) {
    case LambdaSource::user: return "user";
    case LambdaSource::congruence_default: return "congruence-default";
    case LambdaSource::min_with_quarter: return "min-with-quarter";
  }
  return "?";
}

/// lambda = min{1/4, lambda_1}.
struct SpectralData {
  Rational lambda;
  LambdaSource source = LambdaSource::user;
  std::optional<Rational> lambda1;  // the unclamped input, when clamping applied

  static Rational congruence_lambda() { return Rational(975, 4096); }

  static SpectralData from_lambda1(const Rational& lambda1) {
    if (lambda1 <= 0) throw DomainError("lambda_1 must be positive");
    const Rational quarter(1, 4);
    if (lambda1 > quarter) return {quarter, LambdaSource::min_with_quarter, lambda1};
    return {lambda1, LambdaSource::user, std::nullopt};
  }
  static SpectralData congruence() { return {congruence_lambda(), LambdaSource::congruence_default, std::nullopt}; }
};

/// s = 1 - sqrt(1 - 4 lambda); exact when 1 - 4 lambda is a rational square.
struct DecayExponent {
  std::optional<Rational> exact;
  Interval value;
};

inline DecayExponent decay_exponent(const Rational& lambda, mpfr_prec_t prec = Interval::kDefaultPrecision) {
  if (lambda <= 0 || lambda > Rational(1, 4)) throw DomainError("lambda must lie in (0, 1/4]");
  const Rational disc = 1 - 4 * lambda;
  Rational root;
  if (exact::exact_sqrt(disc, root)) {
    const Rational s = 1 - root;
    return {s, Interval(s, prec)};
  }
  return {std::nullopt, Interval::from_int(1, prec) - Interval(disc, prec).sqrt()};
}

inline DecayExponent decay_exponent(const SpectralData& spectral, mpfr_prec_t prec = Interval::kDefaultPrecision) {
  return decay_exponent(spectral.lambda, prec);
}

}  // namespace smallgen::bounds
