// Enumerates the units of norm <= N in the natural order of (2, 3 / Q) and prints the trace census.
//
//   census_demo [N]

#include <cstdlib>
#include <iostream>

#include "smallgen/groupgen/census.hpp"

int main(int argc, char** argv) {
  using namespace smallgen;
  const long n = argc > 1 ? std::atol(argv[1]) : 50;

  const auto algebra = quat::QuatAlgebra::over_rationals(2, 3);
  const groupgen::UnitGroup group(quat::QuatOrder::natural(algebra));
  groupgen::EnumerationJob job;
  job.cap = n;
  const auto ball = groupgen::enumerate_unit_ball(group, job);
  const auto census = groupgen::trace_census(ball.records, 1);

  std::cout << "algebra " << algebra->to_string() << ", ramified at "
            << algebra->ramification()->to_string() << "\n";
  std::cout << census.element_count << " units of norm <= " << n << " (up to sign)\n";
  for (const auto& [kind, count] : census.class_counts) std::cout << "  " << kind << ": " << count << "\n";
  std::cout << "trace window (" << census.window->lower.enclosure().to_decimal() << ", "
            << census.window->upper.to_decimal() << ")\n";
  if (census.min_hyperbolic_abs_trace)
    std::cout << "smallest hyperbolic |tr|: " << *census.min_hyperbolic_abs_trace << "\n";
  std::cout << "violations: " << census.violations.size() << "\n";
  std::cout << "|tr| = 2cosh(log M / 2) for every hyperbolic element: "
            << (census.half_identity_holds ? "yes" : "no") << "\n";
  return census.violations.empty() ? 0 : 2;
}
