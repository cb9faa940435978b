#ifndef EULCAT_RATIONAL_HPP
#define EULCAT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace eulcat {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Exact rational in canonical form (reduced, positive denominator).
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws DimensionMismatch on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Renders "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& n);

/// Parses "p", "-p", "p/q". Throws ParseError.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace eulcat

#endif  // EULCAT_RATIONAL_HPP
