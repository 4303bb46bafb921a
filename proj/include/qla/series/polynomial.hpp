#pragma once

#include <map>
#include <set>
#include <string>

#include "qla/series/atom.hpp"
#include "qla/series/exact_coeff.hpp"

namespace qla::series {

// Multivariate polynomial over derivative atoms with exact Q(sqrt2)
// coefficients. Zero coefficients are never stored, so equality of the
// canonical form is plain map equality.
class AtomPolynomial {
 public:
  AtomPolynomial() = default;

  static AtomPolynomial constant(ExactCoeff c);
  static AtomPolynomial atom(const Atom& a, ExactCoeff c = ExactCoeff(1));

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const ExactCoeff& c);

  AtomPolynomial& operator+=(const AtomPolynomial& o);
  AtomPolynomial& operator-=(const AtomPolynomial& o);
  friend AtomPolynomial operator+(AtomPolynomial a, const AtomPolynomial& b) {
    return a += b;
  }
  friend AtomPolynomial operator-(AtomPolynomial a, const AtomPolynomial& b) {
    return a -= b;
  }
  friend AtomPolynomial operator*(const AtomPolynomial& a,
                                  const AtomPolynomial& b);

  AtomPolynomial scaled(const ExactCoeff& c) const;
  AtomPolynomial negated() const;

  bool operator==(const AtomPolynomial& o) const { return terms_ == o.terms_; }

  const std::map<Monomial, ExactCoeff>& terms() const { return terms_; }

  // All distinct atoms appearing in any monomial.
  std::set<std::uint16_t> atom_ids() const;

  // Splits the polynomial into the part free of spatial derivatives of
  // `base` and (optionally) the removed remainder.
  AtomPolynomial without_derivatives_of(AtomBase base,
                                        AtomPolynomial* removed = nullptr) const;

  std::string to_string() const;

 private:
  std::map<Monomial, ExactCoeff> terms_;
};

}  // namespace qla::series
