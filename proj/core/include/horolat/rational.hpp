#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace horolat {

// Exact arbitrary-precision arithmetic. mpq_class keeps values canonical
// (lowest terms, positive denominator), which is exactly the contract the
// rest of the library relies on.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p/q" or "p" (sign on p, q > 0). Throws std::invalid_argument.
Rational parse_rational(std::string_view s);

/// Formats as "p/q", with "/q" omitted when the denominator is 1.
std::string rational_str(const Rational& q);

Integer floor_rat(const Rational& q);
Integer ceil_rat(const Rational& q);

/// Nearest integer, halves rounded up (floor(q + 1/2)).
Integer round_rat(const Rational& q);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt_floor(const Integer& n);

/// floor(a + sqrt(b)) for rational a and rational b >= 0, exactly.
Integer floor_add_sqrt(const Rational& a, const Rational& b);

/// ceil(a - sqrt(b)) for rational a and rational b >= 0, exactly.
Integer ceil_sub_sqrt(const Rational& a, const Rational& b);

/// Decimal digit count of max(|numerator|, denominator), as a blow-up guard.
std::size_t digit_height(const Rational& q);

double to_double(const Rational& q);

}  // namespace horolat
