#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "baconf/error.hpp"

namespace baconf {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline Rational make_rational(long long num, long long den = 1) {
  require(den != 0, ErrorKind::InvalidArgument, "zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.backend().data(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational r(1);
  Rational b = base;
  while (exponent) {
    if (exponent & 1U) r *= b;
    b *= b;
    exponent >>= 1U;
  }
  return r;
}

/// Decimal "p/q" form; integers print without a denominator.
inline std::string to_string(const Rational& x) { return x.str(); }

inline Rational parse_rational(const std::string& text) {
  if (const auto slash = text.find('/'); slash != std::string::npos &&
      text.find_first_not_of("0+-", slash + 1) == std::string::npos)
    fail(ErrorKind::Parse, "zero denominator: '" + text + "'");
  try {
    Rational r(text);
    return r;
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "not a rational: '" + text + "'");
  }
}

inline std::vector<std::string> to_strings(const std::vector<Rational>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

inline std::vector<Rational> parse_rationals(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  out.reserve(xs.size());
  for (const auto& s : xs) out.push_back(parse_rational(s));
  return out;
}

}  // namespace baconf
