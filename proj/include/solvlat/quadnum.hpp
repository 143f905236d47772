#pragma once
#include <string>

#include "solvlat/rational.hpp"

namespace solvlat {

// Element r + s*sqrt(D) of the real quadratic field Q(sqrt(D)), D a positive
// non-square integer.  D == 0 marks a plain rational (s must then be zero), so
// rational literals combine freely with elements of any one ambient field.
struct QuadNum {
  Rational r, s;
  long D = 0;

  QuadNum() = default;
  QuadNum(long v) : r(v) {}  // NOLINT(google-explicit-constructor)
  QuadNum(const Rational& v) : r(v) {}  // NOLINT(google-explicit-constructor)
  QuadNum(const Rational& rr, const Rational& ss, long disc) : r(rr), s(ss), D(disc) {
    normalize();
  }

  void normalize() {
    if (s == 0) D = 0;
  }
  bool is_zero() const { return r == 0 && s == 0; }
  bool is_rational() const { return s == 0; }
};

inline long qf_common_disc(const QuadNum& x, const QuadNum& y) {
  if (x.D != 0 && y.D != 0 && x.D != y.D)
    throw FieldMismatch("operands live in Q(sqrt(" + std::to_string(x.D) + ")) and Q(sqrt(" +
                        std::to_string(y.D) + "))");
  return x.D != 0 ? x.D : y.D;
}

inline bool operator==(const QuadNum& x, const QuadNum& y) {
  return x.r == y.r && x.s == y.s && (x.s == 0 || x.D == y.D);
}
inline bool operator!=(const QuadNum& x, const QuadNum& y) { return !(x == y); }

inline QuadNum operator+(const QuadNum& x, const QuadNum& y) {
  const long D = qf_common_disc(x, y);
  return QuadNum(x.r + y.r, x.s + y.s, D);
}
inline QuadNum operator-(const QuadNum& x, const QuadNum& y) {
  const long D = qf_common_disc(x, y);
  return QuadNum(x.r - y.r, x.s - y.s, D);
}
inline QuadNum operator-(const QuadNum& x) { return QuadNum(-x.r, -x.s, x.D); }

inline QuadNum operator*(const QuadNum& x, const QuadNum& y) {
  const long D = qf_common_disc(x, y);
  return QuadNum(x.r * y.r + x.s * y.s * D, x.r * y.s + x.s * y.r, D);
}

// Galois involution: sqrt(D) -> -sqrt(D).
inline QuadNum qf_galois(const QuadNum& x) { return QuadNum(x.r, -x.s, x.D); }

// Field norm x * galois(x) = r^2 - s^2 D, a rational.
inline Rational qf_norm(const QuadNum& x) { return x.r * x.r - x.s * x.s * Rational(x.D); }

inline QuadNum qf_inv(const QuadNum& x) {
  if (x.is_zero()) throw DivisionByZero("inverse of zero field element");
  const Rational n = qf_norm(x);
  // D non-square ==> the norm of a nonzero element never vanishes.
  return QuadNum(x.r / n, -x.s / n, x.D);
}

inline QuadNum operator/(const QuadNum& x, const QuadNum& y) { return x * qf_inv(y); }

inline QuadNum& operator+=(QuadNum& x, const QuadNum& y) { return x = x + y; }
inline QuadNum& operator-=(QuadNum& x, const QuadNum& y) { return x = x - y; }
inline QuadNum& operator*=(QuadNum& x, const QuadNum& y) { return x = x * y; }

// Exact sign of r + s*sqrt(D) by rational case analysis: when r and s disagree
// in sign the comparison r^2 vs s^2 D decides (they can never tie, D being a
// non-square).
inline int qf_sign(const QuadNum& x) {
  const int sr = sign_of(x.r), ss = sign_of(x.s);
  if (ss == 0) return sr;
  if (sr == 0) return ss;
  if (sr == ss) return sr;
  const Rational lhs = x.r * x.r, rhs = x.s * x.s * Rational(x.D);
  if (lhs == rhs)
    throw FieldMismatch("discriminant " + std::to_string(x.D) + " is a perfect square");
  return lhs > rhs ? sr : ss;
}

inline bool qf_lt(const QuadNum& x, const QuadNum& y) { return qf_sign(x - y) < 0; }
inline bool qf_gt(const QuadNum& x, const QuadNum& y) { return qf_sign(x - y) > 0; }

enum class QfOp { Add, Sub, Mul, Div };

inline QuadNum qf_arith(const QuadNum& x, const QuadNum& y, QfOp op) {
  switch (op) {
    case QfOp::Add: return x + y;
    case QfOp::Sub: return x - y;
    case QfOp::Mul: return x * y;
    case QfOp::Div: return x / y;
  }
  throw InvalidSpec("unknown field operation");
}

inline QuadNum qf_arith(const QuadNum& x, const QuadNum& y, const std::string& op) {
  if (op == "add") return qf_arith(x, y, QfOp::Add);
  if (op == "sub") return qf_arith(x, y, QfOp::Sub);
  if (op == "mul") return qf_arith(x, y, QfOp::Mul);
  if (op == "div") return qf_arith(x, y, QfOp::Div);
  throw ParseError("unknown field operation: " + op);
}

inline long disc_from_beta(long beta) {
  if (beta < 3) throw InvalidBeta("beta must be an integer >= 3, got " + std::to_string(beta));
  return beta * beta - 4;
}

// alpha = (beta + sqrt(beta^2-4)) / 2: the unit > 1 with alpha + 1/alpha = beta.
inline QuadNum alpha_from_beta(long beta) {
  const long D = disc_from_beta(beta);
  return QuadNum(Rational(beta) / 2, Rational(1) / 2, D);
}

inline QuadNum sqrt_disc(long D) { return QuadNum(Rational(0), Rational(1), D); }

inline std::string qf_to_string(const QuadNum& x) {
  if (x.is_rational()) return rat_to_string(x.r);
  return rat_to_string(x.r) + " + " + rat_to_string(x.s) + "*sqrt(" + std::to_string(x.D) + ")";
}

}  // namespace solvlat
