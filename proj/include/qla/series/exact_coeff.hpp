#pragma once

#include <gmpxx.h>

#include <string>

namespace qla::series {

using Rational = mpq_class;

// Element of the field Q(sqrt(2)), stored as r + s*sqrt(2) with exact
// rational r, s. sqrt(2) is the only irrational entering any in-scope
// expansion (it comes from the pi/4 angle offset).
struct ExactCoeff {
  Rational r;
  Rational s;

  ExactCoeff() : r(0), s(0) {}
  ExactCoeff(long num) : r(num), s(0) {}
  ExactCoeff(long num, long den) : r(num, den), s(0) { r.canonicalize(); }
  explicit ExactCoeff(Rational rat) : r(std::move(rat)), s(0) {}
  ExactCoeff(Rational rat, Rational srt) : r(std::move(rat)), s(std::move(srt)) {}

  static ExactCoeff sqrt2(long num = 1, long den = 1) {
    ExactCoeff c;
    c.s = Rational(num, den);
    c.s.canonicalize();
    return c;
  }

  bool is_zero() const { return r == 0 && s == 0; }

  ExactCoeff operator-() const { return ExactCoeff(-r, -s); }

  ExactCoeff& operator+=(const ExactCoeff& o) {
    r += o.r;
    s += o.s;
    return *this;
  }
  ExactCoeff& operator-=(const ExactCoeff& o) {
    r -= o.r;
    s -= o.s;
    return *this;
  }

  friend ExactCoeff operator+(ExactCoeff a, const ExactCoeff& b) { return a += b; }
  friend ExactCoeff operator-(ExactCoeff a, const ExactCoeff& b) { return a -= b; }

  friend ExactCoeff operator*(const ExactCoeff& a, const ExactCoeff& b) {
    // (r1 + s1*sqrt2)(r2 + s2*sqrt2) = r1 r2 + 2 s1 s2 + (r1 s2 + s1 r2) sqrt2
    return ExactCoeff(a.r * b.r + 2 * a.s * b.s, a.r * b.s + a.s * b.r);
  }

  friend ExactCoeff operator/(const ExactCoeff& a, const ExactCoeff& b);

  bool operator==(const ExactCoeff& o) const { return r == o.r && s == o.s; }

  double to_double() const;
  std::string to_string() const;
};

}  // namespace qla::series
