#pragma once
#include <map>

#include "solvlat/quadnum.hpp"

namespace solvlat {

// Affine expression c + sum_i coeff_i * x_i over Q(sqrt(D)), used to derive
// linear systems by running exact group arithmetic on elements with unknown
// central coordinates.  Products of two non-constant expressions are refused:
// the group law never needs them.
struct AffineQ {
  QuadNum c;
  std::map<int, QuadNum> lin;

  AffineQ() = default;
  AffineQ(long v) : c(v) {}                 // NOLINT(google-explicit-constructor)
  AffineQ(const QuadNum& v) : c(v) {}       // NOLINT(google-explicit-constructor)

  static AffineQ unknown(int id) {
    AffineQ e;
    e.lin[id] = QuadNum(1);
    return e;
  }

  void normalize() {
    for (auto it = lin.begin(); it != lin.end();)
      it = it->second.is_zero() ? lin.erase(it) : std::next(it);
  }
  bool is_constant() const {
    for (const auto& [id, k] : lin)
      if (!k.is_zero()) return false;
    return true;
  }
  bool is_zero() const { return c.is_zero() && is_constant(); }
};

inline AffineQ operator+(const AffineQ& x, const AffineQ& y) {
  AffineQ z = x;
  z.c += y.c;
  for (const auto& [id, k] : y.lin) z.lin[id] += k;
  z.normalize();
  return z;
}

inline AffineQ operator-(const AffineQ& x) {
  AffineQ z;
  z.c = -x.c;
  for (const auto& [id, k] : x.lin) z.lin[id] = -k;
  return z;
}

inline AffineQ operator-(const AffineQ& x, const AffineQ& y) { return x + (-y); }

inline AffineQ operator*(const AffineQ& x, const AffineQ& y) {
  if (!x.is_constant() && !y.is_constant())
    throw SingularSystem("product of two non-constant affine expressions");
  const AffineQ& aff = x.is_constant() ? y : x;
  const QuadNum& k = x.is_constant() ? x.c : y.c;
  AffineQ z;
  z.c = k * aff.c;
  for (const auto& [id, co] : aff.lin) z.lin[id] = k * co;
  z.normalize();
  return z;
}

inline AffineQ operator*(const QuadNum& k, const AffineQ& x) { return AffineQ(k) * x; }

inline AffineQ& operator+=(AffineQ& x, const AffineQ& y) { return x = x + y; }
inline AffineQ& operator-=(AffineQ& x, const AffineQ& y) { return x = x - y; }

inline bool operator==(const AffineQ& x, const AffineQ& y) { return (x - y).is_zero(); }

}  // namespace solvlat
