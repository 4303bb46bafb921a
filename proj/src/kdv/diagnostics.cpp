#include "qla/kdv/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "qla/reductions.hpp"

namespace qla::kdv {

double peak_position(const std::vector<double>& values, double epsilon) {
  const std::size_t n = values.size();
  const std::size_t j =
      std::max_element(values.begin(), values.end()) - values.begin();
  const double ym = values[j == 0 ? n - 1 : j - 1];
  const double y0 = values[j];
  const double yp = values[j + 1 == n ? 0 : j + 1];
  const double denom = ym - 2.0 * y0 + yp;
  double offset = 0.0;
  if (std::fabs(denom) > 1e-300) {
    offset = 0.5 * (ym - yp) / denom;
    offset = std::clamp(offset, -0.5, 0.5);
  }
  const double length = epsilon * static_cast<double>(n);
  double pos = epsilon * (static_cast<double>(j) + offset);
  if (pos < 0.0) pos += length;
  if (pos >= length) pos -= length;
  return pos;
}

KdvDiagnostics diagnostics(const AmplitudeField& field, const SolitonParams& p,
                           double t) {
  const auto psi = psi_field(field);
  const double eps = field.epsilon();
  const double length = eps * static_cast<double>(psi.size());

  KdvDiagnostics d;
  d.mass = eps * tree_sum(psi);
  d.l2 = l2_norm(field);
  d.peak_position = peak_position(psi, eps);

  const double center = p.x0 + p.c * t;
  std::vector<double> err(psi.size());
  for (std::size_t j = 0; j < psi.size(); ++j) {
    const double x = eps * static_cast<double>(j);
    const double ref = soliton_value(p, wrap_distance(x - center, length));
    err[j] = psi[j] - ref;
  }
  d.linf_error = 0.0;
  for (double e : err) d.linf_error = std::max(d.linf_error, std::fabs(e));
  d.l2_error = std::sqrt(eps * tree_sum_squares(err));
  return d;
}

}  // namespace qla::kdv
