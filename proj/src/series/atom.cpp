#include "qla/series/atom.hpp"

#include <stdexcept>

namespace qla::series {

const char* to_string(AtomBase base) {
  switch (base) {
    case AtomBase::Q0: return "q0";
    case AtomBase::Q1: return "q1";
    case AtomBase::Q2: return "q2";
    case AtomBase::Q3: return "q3";
    case AtomBase::Q4: return "q4";
    case AtomBase::Q5: return "q5";
    case AtomBase::NuX: return "nu_x";
    case AtomBase::NuY: return "nu_y";
    case AtomBase::NuZ: return "nu_z";
    case AtomBase::M: return "m";
    case AtomBase::M1: return "m1";
    default: return "?";
  }
}

std::string Atom::to_string() const {
  std::string s;
  if (dx > 0) {
    s += "dx";
    if (dx > 1) s += std::to_string(static_cast<int>(dx));
  }
  if (dy > 0) {
    s += "dy";
    if (dy > 1) s += std::to_string(static_cast<int>(dy));
  }
  if (!s.empty()) return s + "(" + series::to_string(base) + ")";
  return series::to_string(base);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.n + b.n > Monomial::kCapacity) {
    throw std::length_error("Monomial: degree exceeds capacity");
  }
  Monomial out;
  int i = 0, j = 0;
  while (i < a.n && j < b.n) {
    out.ids[out.n++] = a.ids[i] <= b.ids[j] ? a.ids[i++] : b.ids[j++];
  }
  while (i < a.n) out.ids[out.n++] = a.ids[i++];
  while (j < b.n) out.ids[out.n++] = b.ids[j++];
  return out;
}

std::string Monomial::to_string() const {
  if (n == 0) return "1";
  std::string s;
  int i = 0;
  while (i < n) {
    int run = 1;
    while (i + run < n && ids[i + run] == ids[i]) ++run;
    if (!s.empty()) s += "*";
    s += Atom::from_id(ids[i]).to_string();
    if (run > 1) s += "^" + std::to_string(run);
    i += run;
  }
  return s;
}

}  // namespace qla::series
