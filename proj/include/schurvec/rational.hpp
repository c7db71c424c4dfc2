#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "schurvec/caps.hpp"

namespace schurvec {

// Exact rational scalar. GMP-backed, always canonical (reduced, positive
// denominator), so string round-trips are byte-stable.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Canonical encoding: "p" for integers, "p/q" otherwise, q > 0, gcd(p,q)=1.
inline std::string rational_to_string(const Rational& x) {
  return x.str();
}

// Accepts an optional leading '-', digits, optionally '/' and more digits
// with a nonzero denominator. Non-canonical inputs like "2/4" are allowed
// and canonicalized on parse.
inline bool is_rational_literal(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  auto all_digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t k = from; k < to; ++k)
      if (s[k] < '0' || s[k] > '9') return false;
    return true;
  };
  std::size_t slash = s.find('/', i);
  if (slash == std::string::npos) return all_digits(i, s.size());
  if (!all_digits(i, slash) || !all_digits(slash + 1, s.size())) return false;
  for (std::size_t k = slash + 1; k < s.size(); ++k)
    if (s[k] != '0') return true;
  return false;  // zero denominator
}

inline Rational parse_rational(const std::string& s) {
  if (!is_rational_literal(s))
    throw precondition_error("not a rational literal: \"" + s + "\"");
  return Rational(s);
}

inline long long factorial(int n) {
  long long r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

}  // namespace schurvec
