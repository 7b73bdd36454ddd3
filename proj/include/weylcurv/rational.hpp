#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace weylcurv {

/// Exact scalar backend. All algebraic identities are computed and checked
/// over arbitrary-precision rationals; doubles are used only for sampling
/// and for the neck planner.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Absolute tolerance used by the float-backend comparisons (sampling,
/// planner checks, report emission). Callers may override per call.
inline constexpr double kDefaultAbsTol = 1e-9;

double to_double(const Rational& r);

/// Canonical "num/den" rendering ("6", "-3/50").
std::string to_string(const Rational& r);

/// Accepts "num/den", plain integers, and decimal literals ("0.5", "-1.25e2").
/// Decimal input converts exactly (base-10 scaling), never through a double.
Rational rational_from_string(std::string_view text);

Rational rational_factorial(int n);
Rational rational_binomial(int n, int k);

}  // namespace weylcurv
