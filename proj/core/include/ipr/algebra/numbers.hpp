#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ipr {

using Integer = mpz_class;
using Rational = mpq_class;

/// Renders `a/b`, or `a` when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses `a`, `-a`, `a/b`. Throws std::invalid_argument on malformed text or
/// a zero denominator. The result is canonicalized.
Rational parse_rational(std::string_view text);

/// Parses an optionally signed decimal integer that fits in 64 bits.
std::int64_t parse_int(std::string_view text);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Least integer >= q.
Integer ceil(const Rational& q);
/// Greatest integer <= q.
Integer floor(const Rational& q);
/// q - floor(q), in [0, 1).
Rational frac(const Rational& q);

}  // namespace ipr
