#pragma once

#include <stdexcept>
#include <string>

namespace smallgen {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the documented domain of an operation (bad arguments, malformed config).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A predicate stayed undecided up to the configured precision cap.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// A search (enumeration box, word search) would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Three-valued outcome of a certified predicate.
enum class Decision { yes, no, undecided };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::undecided: return "undecided";
  }
  return "?";
}

}  // namespace smallgen
