#pragma once

#include <string>
#include <vector>

namespace qla {

// Which angle a field carries. Labels follow the scheme definitions:
// theta0..theta2 are the Maxwell collision angles, beta0..beta3 the Maxwell
// potential angles, alpha the KdV potential angle, alpha1 the perturbed
// KdV collision angle.
enum class AngleLabel {
  Theta0,
  Theta1,
  Theta2,
  Beta0,
  Beta1,
  Beta2,
  Beta3,
  Alpha,
  Alpha1,
};

const char* to_string(AngleLabel label);

// One real angle per lattice site, in radians.
struct AngleField {
  AngleLabel label = AngleLabel::Alpha;
  std::vector<double> values;

  AngleField() = default;
  AngleField(AngleLabel l, std::vector<double> v)
      : label(l), values(std::move(v)) {}
  AngleField(AngleLabel l, std::size_t sites, double value)
      : label(l), values(sites, value) {}

  std::size_t sites() const { return values.size(); }
};

}  // namespace qla
