#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace qla::series {

// Symbol bases: field components q0..q5, reciprocal refractive indices
// nu_i = 1/n_i, and the KdV nonlinearity functions m, m1. All are treated
// as opaque smooth functions of the lattice coordinates.
enum class AtomBase : std::uint8_t {
  Q0 = 0,
  Q1,
  Q2,
  Q3,
  Q4,
  Q5,
  NuX,
  NuY,
  NuZ,
  M,
  M1,
  kCount,
};

constexpr int kMaxDerivOrder = 4;

// A derivative atom: d^dx/dx^dx d^dy/dy^dy of a base symbol, with
// dx, dy <= 4. Encoded densely so a monomial is a sorted id list.
struct Atom {
  AtomBase base = AtomBase::Q0;
  std::uint8_t dx = 0;
  std::uint8_t dy = 0;

  static constexpr std::uint16_t kStride = (kMaxDerivOrder + 1);

  std::uint16_t id() const {
    return static_cast<std::uint16_t>(
        (static_cast<std::uint16_t>(base) * kStride + dx) * kStride + dy);
  }
  static Atom from_id(std::uint16_t id) {
    Atom a;
    a.dy = static_cast<std::uint8_t>(id % kStride);
    id /= kStride;
    a.dx = static_cast<std::uint8_t>(id % kStride);
    a.base = static_cast<AtomBase>(id / kStride);
    return a;
  }

  Atom with_extra_deriv(int ddx, int ddy) const {
    Atom a = *this;
    a.dx = static_cast<std::uint8_t>(a.dx + ddx);
    a.dy = static_cast<std::uint8_t>(a.dy + ddy);
    return a;
  }

  bool operator==(const Atom&) const = default;

  std::string to_string() const;
};

const char* to_string(AtomBase base);

// Product of atoms (with multiplicity), kept sorted by id: the canonical
// monomial form. Capacity 7 is comfortably above the degree reachable
// within an eps^4 truncation.
struct Monomial {
  static constexpr int kCapacity = 7;
  std::array<std::uint16_t, kCapacity> ids{};
  std::uint8_t n = 0;

  static Monomial one() { return Monomial{}; }
  static Monomial of(const Atom& a) {
    Monomial m;
    m.ids[0] = a.id();
    m.n = 1;
    return m;
  }

  bool is_one() const { return n == 0; }
  int degree() const { return n; }

  // Merge-multiply two sorted monomials.
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  auto operator<=>(const Monomial& o) const {
    if (auto c = n <=> o.n; c != 0) return c;
    for (int i = 0; i < n; ++i) {
      if (auto c = ids[i] <=> o.ids[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }
  bool operator==(const Monomial& o) const {
    return (*this <=> o) == std::strong_ordering::equal;
  }

  std::string to_string() const;
};

}  // namespace qla::series
