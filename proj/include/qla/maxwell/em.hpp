#pragma once

#include "qla/amplitude_field.hpp"
#include "qla/maxwell/index_field.hpp"

namespace qla::maxwell {

// Electromagnetic fields reconstructed from Q (mu0 = 1 normalization):
// E_i = q_i / n_i, H = (q3, q4, q5).
struct EmFields {
  Extents dims;
  std::vector<double> E[3];
  std::vector<double> H[3];
};

EmFields reconstruct_em(const AmplitudeField& field,
                        const RefractiveIndexField& index);
AmplitudeField encode_em(const EmFields& em, const RefractiveIndexField& index,
                         double epsilon);

struct EmDiagnostics {
  double energy = 0.0;     // (1/2) sum |Q|^2 eps^2
  double div_d_max = 0.0;  // max |dx(n_x q0) + dy(n_y q1)| (central diff)
  double div_b_max = 0.0;  // max |dx q3 + dy q4|
  double norm = 0.0;
  double norm_drift = 0.0;  // relative to the supplied t=0 norm
};

EmDiagnostics em_diagnostics(const AmplitudeField& field,
                             const RefractiveIndexField& index,
                             double initial_norm);

}  // namespace qla::maxwell
