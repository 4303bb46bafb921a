#include "qla/kdv/soliton.hpp"

#include <cmath>

#include "qla/errors.hpp"

namespace qla::kdv {

double soliton_value(const SolitonParams& p, double u) {
  const double sech = 1.0 / std::cosh(p.argument_factor() * u);
  return p.amplitude() * sech * sech;
}

double wrap_distance(double u, double domain_length) {
  u = std::fmod(u, domain_length);
  if (u < -0.5 * domain_length) u += domain_length;
  if (u >= 0.5 * domain_length) u -= domain_length;
  return u;
}

AmplitudeField soliton_init(const SolitonParams& p, std::size_t sites,
                            double epsilon,
                            std::vector<std::string>* warnings) {
  if (!(p.a > 0.0 && p.b > 0.0 && p.c > 0.0)) {
    throw ConfigError("soliton: a, b, c must all be positive");
  }
  const double length = epsilon * static_cast<double>(sites);
  // Effective support: |u| <= 6 / argument_factor covers all but ~1e-4 of
  // the profile. Warn when that width exceeds half the domain.
  const double width = 12.0 / p.argument_factor();
  if (width > 0.5 * length && warnings != nullptr) {
    warnings->push_back(
        "soliton wider than half the domain (width " + std::to_string(width) +
        " vs length " + std::to_string(length) +
        "); periodic wrap will contaminate the run");
  }

  AmplitudeField field(Extents{sites, 1}, 2, epsilon);
  auto q0 = field.plane(0);
  auto q1 = field.plane(1);
  for (std::size_t j = 0; j < sites; ++j) {
    const double x = epsilon * static_cast<double>(j);
    const double psi = soliton_value(p, wrap_distance(x - p.x0, length));
    q0[j] = 0.5 * psi;
    q1[j] = 0.5 * psi;
  }
  return field;
}

}  // namespace qla::kdv
