#include "qla/series/polynomial.hpp"

namespace qla::series {

AtomPolynomial AtomPolynomial::constant(ExactCoeff c) {
  AtomPolynomial p;
  p.add_term(Monomial::one(), c);
  return p;
}

AtomPolynomial AtomPolynomial::atom(const Atom& a, ExactCoeff c) {
  AtomPolynomial p;
  p.add_term(Monomial::of(a), c);
  return p;
}

void AtomPolynomial::add_term(const Monomial& m, const ExactCoeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AtomPolynomial& AtomPolynomial::operator+=(const AtomPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

AtomPolynomial& AtomPolynomial::operator-=(const AtomPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

AtomPolynomial operator*(const AtomPolynomial& a, const AtomPolynomial& b) {
  AtomPolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

AtomPolynomial AtomPolynomial::scaled(const ExactCoeff& c) const {
  AtomPolynomial out;
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

AtomPolynomial AtomPolynomial::negated() const {
  AtomPolynomial out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, -coeff);
  return out;
}

AtomPolynomial AtomPolynomial::without_derivatives_of(
    AtomBase base, AtomPolynomial* removed) const {
  AtomPolynomial kept;
  for (const auto& [m, c] : terms_) {
    bool has_deriv = false;
    for (int i = 0; i < m.n; ++i) {
      const Atom a = Atom::from_id(m.ids[i]);
      if (a.base == base && (a.dx > 0 || a.dy > 0)) {
        has_deriv = true;
        break;
      }
    }
    if (has_deriv) {
      if (removed != nullptr) removed->add_term(m, c);
    } else {
      kept.add_term(m, c);
    }
  }
  return kept;
}

std::set<std::uint16_t> AtomPolynomial::atom_ids() const {
  std::set<std::uint16_t> ids;
  for (const auto& [m, c] : terms_) {
    for (int i = 0; i < m.n; ++i) ids.insert(m.ids[i]);
  }
  return ids;
}

std::string AtomPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    if (m.is_one()) {
      s += "(" + c.to_string() + ")";
    } else {
      s += "(" + c.to_string() + ")*" + m.to_string();
    }
  }
  return s;
}

}  // namespace qla::series
