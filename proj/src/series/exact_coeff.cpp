#include "qla/series/exact_coeff.hpp"

#include <cmath>
#include <stdexcept>

namespace qla::series {

ExactCoeff operator/(const ExactCoeff& a, const ExactCoeff& b) {
  // 1 / (r + s*sqrt2) = (r - s*sqrt2) / (r^2 - 2 s^2)
  const Rational norm = b.r * b.r - 2 * b.s * b.s;
  if (norm == 0) {
    if (b.is_zero()) throw std::domain_error("ExactCoeff: division by zero");
    // r^2 = 2 s^2 has no nonzero rational solution, so norm == 0 implies 0.
    throw std::domain_error("ExactCoeff: division by zero");
  }
  const ExactCoeff conj(b.r, -b.s);
  ExactCoeff num = a * conj;
  num.r /= norm;
  num.s /= norm;
  return num;
}

double ExactCoeff::to_double() const {
  return r.get_d() + s.get_d() * std::sqrt(2.0);
}

std::string ExactCoeff::to_string() const {
  if (s == 0) return r.get_str();
  if (r == 0) return s.get_str() + "*sqrt2";
  const std::string sep = s > 0 ? "+" : "";
  return r.get_str() + sep + s.get_str() + "*sqrt2";
}

}  // namespace qla::series
