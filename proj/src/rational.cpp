#include "gaplab/rational.hpp"

namespace gaplab {

Rational ratio(long num, long den) {
  if (den == 0) throw GaplabError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parseRational(const std::string& s) {
  if (s.empty()) throw GaplabError("empty rational literal");
  std::size_t slash = s.find('/');
  try {
    mpz_class num(slash == std::string::npos ? s : s.substr(0, slash));
    mpz_class den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
    if (den == 0) throw GaplabError("rational literal with zero denominator: " + s);
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw GaplabError("malformed rational literal: " + s);
  }
}

std::string toString(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double toDouble(const Rational& r) { return r.get_d(); }

std::uint64_t isqrt(std::uint64_t n) {
  if (n < 2) return n;
  std::uint64_t x = n, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

std::uint64_t powWithin(std::uint64_t base, unsigned exp, std::uint64_t budget) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > budget / base) return 0;
    r *= base;
    if (r > budget) return 0;
  }
  return r;
}

}  // namespace gaplab
