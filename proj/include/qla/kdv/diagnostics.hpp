#pragma once

#include "qla/amplitude_field.hpp"
#include "qla/kdv/soliton.hpp"

namespace qla::kdv {

struct KdvDiagnostics {
  double mass = 0.0;       // eps * sum(psi)
  double l2 = 0.0;         // amplitude-field l2 norm
  double peak_position = 0.0;
  double linf_error = 0.0;  // vs analytic soliton translated by c*t
  double l2_error = 0.0;    // sqrt(eps * sum((psi - ref)^2))
};

// Subgrid peak of a periodic sampled profile via 3-point parabolic fit
// around the grid argmax. Returns a position in [0, L).
double peak_position(const std::vector<double>& values, double epsilon);

KdvDiagnostics diagnostics(const AmplitudeField& field, const SolitonParams& p,
                           double t);

}  // namespace qla::kdv
