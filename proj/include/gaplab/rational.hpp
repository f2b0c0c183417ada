#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaplab {

// All weights, probabilities and LP values in the toolkit are exact rationals.
// mpq_class keeps denominators positive and fractions canonical.
using Rational = mpq_class;

Rational ratio(long num, long den = 1);

// Parses "p/q" or "p" (q > 0 after canonicalization). Throws on junk.
Rational parseRational(const std::string& s);
std::string toString(const Rational& r);

double toDouble(const Rational& r);

// floor(sqrt(n)) via integer Newton iteration; no floating point.
std::uint64_t isqrt(std::uint64_t n);

std::uint64_t binomial(unsigned n, unsigned k);

// R^n if it is at most `budget`, otherwise 0 (caller decides how to refuse).
std::uint64_t powWithin(std::uint64_t base, unsigned exp, std::uint64_t budget);

struct GaplabError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gaplab
