#include "qla/maxwell/em.hpp"

#include <cmath>

#include "qla/errors.hpp"
#include "qla/reductions.hpp"

namespace qla::maxwell {

EmFields reconstruct_em(const AmplitudeField& field,
                        const RefractiveIndexField& index) {
  if (field.ncomp() != 6 || field.dims() != index.dims()) {
    throw ConfigError("reconstruct_em: field/index shape mismatch");
  }
  EmFields em;
  em.dims = field.dims();
  for (int a = 0; a < 3; ++a) {
    const auto q = field.plane(a);
    const auto& n = index.n(a);
    em.E[a].resize(field.sites());
    for (std::size_t s = 0; s < em.E[a].size(); ++s) em.E[a][s] = q[s] / n[s];
    const auto h = field.plane(3 + a);
    em.H[a].assign(h.begin(), h.end());
  }
  return em;
}

AmplitudeField encode_em(const EmFields& em, const RefractiveIndexField& index,
                         double epsilon) {
  if (em.dims != index.dims()) {
    throw ConfigError("encode_em: field/index shape mismatch");
  }
  AmplitudeField field(em.dims, 6, epsilon);
  for (int a = 0; a < 3; ++a) {
    auto q = field.plane(a);
    const auto& n = index.n(a);
    for (std::size_t s = 0; s < em.E[a].size(); ++s) q[s] = n[s] * em.E[a][s];
    auto h = field.plane(3 + a);
    for (std::size_t s = 0; s < em.H[a].size(); ++s) h[s] = em.H[a][s];
  }
  return field;
}

EmDiagnostics em_diagnostics(const AmplitudeField& field,
                             const RefractiveIndexField& index,
                             double initial_norm) {
  const std::size_t nx = field.dims().nx, ny = field.dims().ny;
  const double eps = field.epsilon();
  EmDiagnostics d;

  double sq = 0.0;
  for (int c = 0; c < 6; ++c) sq += tree_sum_squares(field.plane(c));
  d.energy = 0.5 * sq * eps * eps;
  d.norm = std::sqrt(sq);
  d.norm_drift =
      initial_norm > 0.0 ? std::fabs(d.norm - initial_norm) / initial_norm : 0.0;

  const auto q0 = field.plane(0);
  const auto q1 = field.plane(1);
  const auto q3 = field.plane(3);
  const auto q4 = field.plane(4);
  const auto& n0 = index.n(0);
  const auto& n1 = index.n(1);
  const double inv = 1.0 / (2.0 * eps);
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const std::size_t xm = iy * nx + (ix == 0 ? nx - 1 : ix - 1);
      const std::size_t xp = iy * nx + (ix + 1 == nx ? 0 : ix + 1);
      const std::size_t ym = (iy == 0 ? ny - 1 : iy - 1) * nx + ix;
      const std::size_t yp = (iy + 1 == ny ? 0 : iy + 1) * nx + ix;
      const double div_d =
          (n0[xp] * q0[xp] - n0[xm] * q0[xm]) * inv +
          (n1[yp] * q1[yp] - n1[ym] * q1[ym]) * inv;
      const double div_b = (q3[xp] - q3[xm]) * inv + (q4[yp] - q4[ym]) * inv;
      d.div_d_max = std::max(d.div_d_max, std::fabs(div_d));
      d.div_b_max = std::max(d.div_b_max, std::fabs(div_b));
    }
  }
  return d;
}

}  // namespace qla::maxwell
