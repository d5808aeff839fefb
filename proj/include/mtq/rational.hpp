#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "mtq/errors.hpp"

namespace mtq {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& r) { return r.sign(); }

inline double to_double(const Rational& r) { return static_cast<double>(r); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// "p/q" or "p"; also accepts decimal-free signed integers.
Rational parse_rational(const std::string& text);

std::string format_rational(const Rational& r);

// Exact square root of a non-negative integer, if it is a perfect square.
std::optional<Integer> integer_sqrt_exact(const Integer& n);

// Exact square root of a non-negative rational, if it is a square in Q.
std::optional<Rational> rational_sqrt_exact(const Rational& r);

} // namespace mtq
