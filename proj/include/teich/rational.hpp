#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace teich {

using Integer = mpz_class;

// Exact rational, always canonical (lowest terms, positive denominator).
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);
Rat make_rat(const Integer& num, const Integer& den);

// Canonical "num/den" rendering; integers render as "n/1".
std::string to_string(const Rat& r);

// Accepts "num/den" or a bare integer "n". Anything else (decimals, exponents,
// whitespace) is rejected with ConfigError.
Rat parse_rat(std::string_view text);

Rat pow(const Rat& base, long exponent);

inline int sign(const Rat& r) { return sgn(r); }

}  // namespace teich
