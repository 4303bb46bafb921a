#include "qla/series/truncated_series.hpp"

#include <stdexcept>

namespace qla::series {

TruncatedSeries TruncatedSeries::constant(ExactCoeff c) {
  TruncatedSeries s;
  s.coeffs_[0] = AtomPolynomial::constant(std::move(c));
  return s;
}

TruncatedSeries TruncatedSeries::atom(const Atom& a) {
  TruncatedSeries s;
  s.coeffs_[0] = AtomPolynomial::atom(a);
  return s;
}

TruncatedSeries TruncatedSeries::term(int power, AtomPolynomial poly) {
  TruncatedSeries s;
  if (power <= kMaxOrder) s.coeffs_[power] = std::move(poly);
  return s;
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  for (int k = 0; k <= kMaxOrder; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  for (int k = 0; k <= kMaxOrder; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out;
  for (int i = 0; i <= TruncatedSeries::kMaxOrder; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= TruncatedSeries::kMaxOrder; ++j) {
      if (b.coeff(j).is_zero()) continue;
      out.coeff(i + j) += a.coeff(i) * b.coeff(j);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::scaled(const ExactCoeff& c) const {
  TruncatedSeries out;
  for (int k = 0; k <= kMaxOrder; ++k) out.coeffs_[k] = coeffs_[k].scaled(c);
  return out;
}

std::string TruncatedSeries::to_string() const {
  std::string s;
  for (int k = 0; k <= kMaxOrder; ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!s.empty()) s += "  +  ";
    s += "eps^" + std::to_string(k) + " * [" + coeffs_[k].to_string() + "]";
  }
  return s.empty() ? "0" : s;
}

TrigPair trig_expand(const TruncatedSeries& delta, AngleOffset offset) {
  if (!delta.coeff(0).is_zero()) {
    throw std::invalid_argument(
        "trig_expand: angle series must have no eps^0 part");
  }
  // cos(d) = 1 - d^2/2 + d^4/24, sin(d) = d - d^3/6; d^5 and beyond fall
  // outside the truncation because d is O(eps).
  const TruncatedSeries d2 = delta * delta;
  const TruncatedSeries d3 = d2 * delta;
  const TruncatedSeries d4 = d2 * d2;
  TruncatedSeries cos_d = TruncatedSeries::one();
  cos_d -= d2.scaled(ExactCoeff(1, 2));
  cos_d += d4.scaled(ExactCoeff(1, 24));
  TruncatedSeries sin_d = delta;
  sin_d -= d3.scaled(ExactCoeff(1, 6));

  if (offset == AngleOffset::Zero) {
    return {cos_d, sin_d};
  }
  // cos(pi/4 + d) = (cos d - sin d)/sqrt2, sin(pi/4 + d) = (cos d + sin d)/sqrt2
  const ExactCoeff half_sqrt2 = ExactCoeff::sqrt2(1, 2);
  return {(cos_d - sin_d).scaled(half_sqrt2),
          (cos_d + sin_d).scaled(half_sqrt2)};
}

namespace {

// Taylor shift of a single monomial evaluated at x -+ eps. Returns the
// added-order expansion up to `budget` extra powers of eps.
// shift sign: f(x + h) with h = -direction * eps, so the coefficient of the
// k-th derivative is h^k / k! = (-direction)^k eps^k / k!.
void shift_monomial(const Monomial& m, const ExactCoeff& coeff, int base_power,
                    ShiftAxis axis, int direction, TruncatedSeries& out) {
  const int budget = TruncatedSeries::kMaxOrder - base_power;

  // Per added order k, the polynomial of shifted-atom products.
  std::array<AtomPolynomial, TruncatedSeries::kMaxOrder + 1> acc;
  acc[0] = AtomPolynomial::constant(ExactCoeff(1));

  static const long kFactorial[5] = {1, 1, 2, 6, 24};

  for (int ai = 0; ai < m.n; ++ai) {
    const Atom a = Atom::from_id(m.ids[ai]);
    // Shift series of this atom: sum_k h^k/k! * d^k a
    std::array<AtomPolynomial, TruncatedSeries::kMaxOrder + 1> next;
    for (int have = 0; have <= budget; ++have) {
      if (acc[have].is_zero()) continue;
      for (int k = 0; have + k <= budget; ++k) {
        const int ddx = axis == ShiftAxis::X ? k : 0;
        const int ddy = axis == ShiftAxis::Y ? k : 0;
        if (a.dx + ddx > kMaxDerivOrder || a.dy + ddy > kMaxDerivOrder) {
          throw std::length_error(
              "stream_shift: derivative order beyond cap for atom " +
              a.to_string());
        }
        ExactCoeff c(1, kFactorial[k]);
        if (direction > 0 && (k % 2 == 1)) c = -c;
        next[have + k] +=
            (acc[have] * AtomPolynomial::atom(a.with_extra_deriv(ddx, ddy)))
                .scaled(c);
      }
    }
    acc = std::move(next);
  }

  for (int k = 0; k <= budget; ++k) {
    if (acc[k].is_zero()) continue;
    out.coeff(base_power + k) += acc[k].scaled(coeff);
  }
}

}  // namespace

TruncatedSeries stream_shift(const TruncatedSeries& s, ShiftAxis axis,
                             int direction) {
  TruncatedSeries out;
  for (int p = 0; p <= TruncatedSeries::kMaxOrder; ++p) {
    for (const auto& [m, c] : s.coeff(p).terms()) {
      shift_monomial(m, c, p, axis, direction, out);
    }
  }
  return out;
}

}  // namespace qla::series
