#pragma once

#include <cmath>
#include <string>

#include "qla/amplitude_field.hpp"
#include "qla/kdv/scheme.hpp"

namespace qla::kdv {

// Parameters of the sech^2 soliton of psi_t + a psi psi_x + b psi_xxx = 0:
//   psi(x, t) = (3c/a) sech^2( (1/2) sqrt(c/b) (x - c t - x0) )
struct SolitonParams {
  double a = 4.0;
  double b = 0.5;
  double c = 0.5;
  double x0 = 0.0;

  double amplitude() const { return 3.0 * c / a; }
  double argument_factor() const { return 0.5 * std::sqrt(c / b); }
};

// Analytic profile at signed distance u from the (moving) center.
double soliton_value(const SolitonParams& p, double u);

// Periodic signed distance to [-L/2, L/2).
double wrap_distance(double u, double domain_length);

// Initializes q0 = q1 = psi/2 on x = eps * j. Emits a warning into
// *warnings when the soliton support is wide relative to the domain
// (periodic wrap contamination).
AmplitudeField soliton_init(const SolitonParams& p, std::size_t sites,
                            double epsilon,
                            std::vector<std::string>* warnings = nullptr);

}  // namespace qla::kdv
