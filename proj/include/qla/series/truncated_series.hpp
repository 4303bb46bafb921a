#pragma once

#include <array>
#include <string>

#include "qla/series/polynomial.hpp"

namespace qla::series {

// Formal polynomial in the lattice unit eps, truncated after eps^4.
// Coefficients are exact AtomPolynomials; all arithmetic drops eps^5 and
// higher, which is consistent (truncation by an ideal), so associativity
// and distributivity hold exactly.
class TruncatedSeries {
 public:
  static constexpr int kMaxOrder = 4;

  TruncatedSeries() = default;

  static TruncatedSeries constant(ExactCoeff c);
  static TruncatedSeries one() { return constant(ExactCoeff(1)); }
  static TruncatedSeries atom(const Atom& a);
  // c * eps^power * poly
  static TruncatedSeries term(int power, AtomPolynomial poly);

  const AtomPolynomial& coeff(int power) const { return coeffs_[power]; }
  AtomPolynomial& coeff(int power) { return coeffs_[power]; }

  bool is_zero() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
    return a -= b;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b);

  TruncatedSeries scaled(const ExactCoeff& c) const;

  bool operator==(const TruncatedSeries& o) const = default;

  std::string to_string() const;

 private:
  std::array<AtomPolynomial, kMaxOrder + 1> coeffs_;
};

enum class AngleOffset { Zero, QuarterPi };

struct TrigPair {
  TruncatedSeries cos;
  TruncatedSeries sin;
};

// Maclaurin expansion of cos/sin of `offset + delta` where delta has no
// eps^0 part (so the expansion terminates within the truncation order).
// The pi/4 offset is handled exactly through sqrt2/2 coefficients.
TrigPair trig_expand(const TruncatedSeries& delta, AngleOffset offset);

enum class ShiftAxis { X, Y };

// Taylor shift of a whole series by one lattice unit of size eps:
// direction +1 produces f(x - eps) (a value moved toward +x reads from the
// left), direction -1 produces f(x + eps). Every atom in a monomial shifts
// jointly. Throws if a needed derivative order would exceed the cap.
TruncatedSeries stream_shift(const TruncatedSeries& s, ShiftAxis axis,
                             int direction);

}  // namespace qla::series
