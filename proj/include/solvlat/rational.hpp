#pragma once
#include <gmpxx.h>

#include <string>

#include "solvlat/errors.hpp"

namespace solvlat {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline int sign_of(const Rational& q) { return sgn(q); }

// Canonical encoding: "p" when the denominator is 1, otherwise "p/q" with q > 0.
inline std::string rat_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational rat_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Integer n(s, 10);
      return Rational(n);
    }
    const std::string ns = s.substr(0, slash);
    const std::string ds = s.substr(slash + 1);
    if (ns.empty() || ds.empty()) throw ParseError("malformed rational literal: " + s);
    Integer n(ns, 10), d(ds, 10);
    if (d == 0) throw ParseError("zero denominator in rational literal: " + s);
    return make_rational(n, d);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational literal: " + s);
  }
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace solvlat
