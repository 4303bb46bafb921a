#pragma once

#include "qla/kdv/scheme.hpp"
#include "qla/series/certify.hpp"
#include "qla/series/numeric_eval.hpp"

namespace qla::kdv {

// Exact one-step expansion of the variant's program applied to the generic
// symbolic field (q0, q1). The collision angle enters as
// alpha1 = pi/4 + eps^2 m1 with m1 an opaque atom; the potential angle as
// alpha = eps^3 m.
series::SeriesVector symbolic_one_step(Variant variant);

// Certifies the continuum limit of psi = q0 + q1:
//   psi(t+dt) - psi = -eps^3 (A m * D[psi] + 1/2 psi_xxx) + O(eps^5)
// with (A, D) = (4 m1 psi_x) for UnitaryV1, (-4 m1 psi_x) for UnitaryV2,
// and (m psi) for the non-unitary variant. Orders eps^0..eps^2 and eps^4
// must vanish identically.
series::CertificationReport certify(Variant variant);

// Crosscheck subject: symbolic prediction vs a real one-step execution on
// trig polynomial initial data (q0 = f0, q1 = f1) over a periodic domain
// of physical length `domain_length` (must be an integer multiple of eps).
series::CrosscheckCase crosscheck_case(Variant variant, double domain_length,
                                       series::TrigField1D f0,
                                       series::TrigField1D f1);

}  // namespace qla::kdv
