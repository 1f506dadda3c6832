#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pierce/errors.hpp"

namespace pierce {

// Exact arithmetic substrate. GMP rationals are kept canonical (reduced,
// positive denominator) by the backend, which is exactly the representation
// contract the rest of the toolkit relies on.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Matrix = std::vector<std::vector<Rational>>;

// Parses "p/q" or "p" with an optional leading sign on p. The denominator must
// be a positive integer literal; "1/0" and malformed text raise ParseError.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, "p" when the denominator is one.
std::string format_rational(const Rational& value);

inline int sign_of(const Rational& value) {
    return value.sign();
}

inline Integer rational_num(const Rational& value) { return numerator(value); }
inline Integer rational_den(const Rational& value) { return denominator(value); }

// Determinant of a square rational matrix. Denominators are cleared per
// column (positive scalings, so the sign is unchanged) and the integer core
// runs fraction-free Bareiss elimination to bound intermediate growth.
Rational determinant(const Matrix& m);
int determinant_sign(const Matrix& m);

// Fraction-free Bareiss elimination, destructive. Exact divisions only.
Integer bareiss_determinant(std::vector<std::vector<Integer>>& m);

// Solves a (possibly rectangular) exact linear system a·x = b by Gaussian
// elimination. Returns nullopt when inconsistent; raises invalid_argument on
// shape errors. Underdetermined systems report the rank deficit via the
// second member so callers can reject non-unique solutions.
struct LinearSolve {
    std::vector<Rational> solution;
    bool unique = false;
};
std::optional<LinearSolve> solve_linear(Matrix a, std::vector<Rational> b);

// Ceiling of p/q for a positive rational, as an arbitrary-precision integer.
Integer ceil_rational(const Rational& value);

}  // namespace pierce
