#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace plap {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Formats as "p/q", or just "p" when the denominator is 1.
std::string rat_to_string(const Rat& q);

/// Accepts "p", "p/q" and plain decimal integers with optional sign.
/// Throws std::invalid_argument on anything else (including q = 0).
Rat parse_rational(const std::string& s);

double rat_to_double(const Rat& q);

BigInt ipow(BigInt base, unsigned exp);

} // namespace plap
