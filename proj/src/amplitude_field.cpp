#include "qla/amplitude_field.hpp"

#include <cmath>
#include <string>

#include "qla/errors.hpp"
#include "qla/reductions.hpp"

namespace qla {

AmplitudeField::AmplitudeField(Extents dims, int ncomp, double epsilon)
    : dims_(dims), ncomp_(ncomp), epsilon_(epsilon) {
  if (dims.nx == 0 || dims.ny == 0) {
    throw ConfigError("AmplitudeField: lattice extents must be positive");
  }
  if (ncomp < 1) {
    throw ConfigError("AmplitudeField: ncomp must be >= 1");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw ConfigError("AmplitudeField: epsilon must satisfy 0 < epsilon < 1, got " +
                      std::to_string(epsilon));
  }
  planes_.assign(static_cast<std::size_t>(ncomp),
                 std::vector<double>(dims.sites(), 0.0));
}

bool AmplitudeField::all_finite() const {
  for (const auto& p : planes_) {
    for (double v : p) {
      if (!std::isfinite(v)) return false;
    }
  }
  return true;
}

double l2_norm(const AmplitudeField& field) {
  double acc = 0.0;
  for (int c = 0; c < field.ncomp(); ++c) {
    acc += tree_sum_squares(field.plane(c));
  }
  return std::sqrt(acc);
}

}  // namespace qla
