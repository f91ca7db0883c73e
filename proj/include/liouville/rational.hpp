#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace liouville {

// Exact rational arithmetic for identity verification and boundary-exact
// criticality classification.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "7/3", "-2/5", "5". Returns nullopt for anything else
// (decimal strings are handled by the double path, not here).
std::optional<Rational> parse_rational(const std::string& text);

double to_double(const Rational& x);

// -1, 0, +1
int sign(const Rational& x);

std::string to_string(const Rational& x);

}  // namespace liouville
