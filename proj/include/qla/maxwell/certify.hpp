#pragma once

#include <array>

#include "qla/maxwell/scheme.hpp"
#include "qla/series/certify.hpp"
#include "qla/series/numeric_eval.hpp"

namespace qla::maxwell {

// Exact one-step expansion of V_Y V_X U_Y U_X on the generic 6-component
// field. Angles enter as series: theta_i = (eps/4) nu_i and
// beta = -eps^2 d(nu)/d(x|y) (the nu = 1/n substitution makes both angle
// families and the target equations share one atom basis). With
// `vacuum` set, nu is the exact constant 1 and the betas vanish.
series::SeriesVector symbolic_one_step(int row3_sign, bool vacuum);

struct MaxwellCertification {
  series::CertificationReport report;
  // +1 or -1 once resolved; 0 when the certification could not single out
  // exactly one candidate (report fails in that case).
  int row3_sign = 0;
  // +1: dq5/dt = -dx(q1 nu_y) + dy(q0 nu_x); -1: both terms negative.
  int q5_sign = 0;
};

// Certifies all six component equations at order eps^2 (orders eps^0,
// eps^1, eps^3 must vanish identically; eps^4 is reported but not gated),
// resolving the V_Y row-3 form via the q3 equation and the q5 sign via the
// q5 equation.
MaxwellCertification certify();

// Crosscheck subject in vacuum: symbolic prediction vs a real one-step
// execution on 2D trig polynomial data over a square periodic domain.
series::CrosscheckCase crosscheck_case_vacuum(
    double domain_length, std::array<series::TrigField2D, 6> fields);

}  // namespace qla::maxwell
