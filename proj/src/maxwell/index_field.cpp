#include "qla/maxwell/index_field.hpp"

#include <cmath>

#include "qla/errors.hpp"

namespace qla::maxwell {

double IndexProfile::value(double x, double y) const {
  switch (shape) {
    case Shape::Uniform:
      return base;
    case Shape::LinearRamp:
      return base + slope_x * (x - center_x) + slope_y * (y - center_y);
    case Shape::TanhInterface:
      return base + 0.5 * delta * (1.0 + std::tanh((x - center_x) / width));
    case Shape::GaussianLens: {
      const double rx = x - center_x, ry = y - center_y;
      return base + delta * std::exp(-(rx * rx + ry * ry) / (width * width));
    }
  }
  return base;
}

double IndexProfile::ddx(double x, double y) const {
  switch (shape) {
    case Shape::Uniform:
      return 0.0;
    case Shape::LinearRamp:
      return slope_x;
    case Shape::TanhInterface: {
      const double th = std::tanh((x - center_x) / width);
      return 0.5 * delta * (1.0 - th * th) / width;
    }
    case Shape::GaussianLens: {
      const double rx = x - center_x, ry = y - center_y;
      const double g = std::exp(-(rx * rx + ry * ry) / (width * width));
      return delta * g * (-2.0 * rx / (width * width));
    }
  }
  return 0.0;
}

double IndexProfile::ddy(double x, double y) const {
  switch (shape) {
    case Shape::Uniform:
    case Shape::TanhInterface:  // interface runs along y
      return 0.0;
    case Shape::LinearRamp:
      return slope_y;
    case Shape::GaussianLens: {
      const double rx = x - center_x, ry = y - center_y;
      const double g = std::exp(-(rx * rx + ry * ry) / (width * width));
      return delta * g * (-2.0 * ry / (width * width));
    }
  }
  return 0.0;
}

RefractiveIndexField RefractiveIndexField::from_profile(
    const IndexProfile& profile, Extents dims, double epsilon, DerivMode mode,
    double floor) {
  RefractiveIndexField f;
  f.dims_ = dims;
  f.floor_ = floor;
  const bool apply[3] = {profile.apply_x, profile.apply_y, profile.apply_z};
  for (int a = 0; a < 3; ++a) {
    f.n_[a].resize(dims.sites());
    f.dndx_[a].assign(dims.sites(), 0.0);
    f.dndy_[a].assign(dims.sites(), 0.0);
  }
  for (std::size_t iy = 0; iy < dims.ny; ++iy) {
    for (std::size_t ix = 0; ix < dims.nx; ++ix) {
      const std::size_t s = iy * dims.nx + ix;
      const double x = epsilon * static_cast<double>(ix);
      const double y = epsilon * static_cast<double>(iy);
      for (int a = 0; a < 3; ++a) {
        if (apply[a]) {
          f.n_[a][s] = profile.value(x, y);
          if (mode == DerivMode::Analytic) {
            f.dndx_[a][s] = profile.ddx(x, y);
            f.dndy_[a][s] = profile.ddy(x, y);
          }
        } else {
          f.n_[a][s] = profile.base;
        }
      }
    }
  }
  if (mode == DerivMode::CentralDifference) f.central_differences(epsilon);
  f.validate_floor();
  f.detect_uniform();
  return f;
}

RefractiveIndexField RefractiveIndexField::from_planes(
    std::vector<std::vector<double>> n, Extents dims, double epsilon,
    double floor) {
  if (n.size() != 3) {
    throw ConfigError("index field: expected 3 component planes");
  }
  RefractiveIndexField f;
  f.dims_ = dims;
  f.floor_ = floor;
  for (int a = 0; a < 3; ++a) {
    if (n[a].size() != dims.sites()) {
      throw ConfigError("index field: plane size does not match extents");
    }
    f.n_[a] = std::move(n[a]);
  }
  f.central_differences(epsilon);
  f.validate_floor();
  f.detect_uniform();
  return f;
}

void RefractiveIndexField::central_differences(double epsilon) {
  const std::size_t nx = dims_.nx, ny = dims_.ny;
  const double inv = 1.0 / (2.0 * epsilon);
  for (int a = 0; a < 3; ++a) {
    dndx_[a].resize(dims_.sites());
    dndy_[a].resize(dims_.sites());
    for (std::size_t iy = 0; iy < ny; ++iy) {
      for (std::size_t ix = 0; ix < nx; ++ix) {
        const std::size_t s = iy * nx + ix;
        const std::size_t xm = iy * nx + (ix == 0 ? nx - 1 : ix - 1);
        const std::size_t xp = iy * nx + (ix + 1 == nx ? 0 : ix + 1);
        const std::size_t ym = (iy == 0 ? ny - 1 : iy - 1) * nx + ix;
        const std::size_t yp = (iy + 1 == ny ? 0 : iy + 1) * nx + ix;
        dndx_[a][s] = (n_[a][xp] - n_[a][xm]) * inv;
        dndy_[a][s] = (n_[a][yp] - n_[a][ym]) * inv;
      }
    }
  }
}

void RefractiveIndexField::validate_floor() const {
  for (int a = 0; a < 3; ++a) {
    for (std::size_t s = 0; s < n_[a].size(); ++s) {
      const double v = n_[a][s];
      if (!std::isfinite(v) || v < floor_) {
        throw ConfigError("index field: n_" + std::string(1, "xyz"[a]) +
                          " below floor " + std::to_string(floor_) +
                          " at site " + std::to_string(s));
      }
    }
  }
}

void RefractiveIndexField::detect_uniform() {
  uniform_ = true;
  for (int a = 0; a < 3 && uniform_; ++a) {
    for (std::size_t s = 1; s < n_[a].size(); ++s) {
      if (n_[a][s] != n_[a][0]) {
        uniform_ = false;
        break;
      }
    }
  }
}

}  // namespace qla::maxwell
