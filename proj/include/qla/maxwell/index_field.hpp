#pragma once

#include <string>
#include <vector>

#include "qla/amplitude_field.hpp"

namespace qla::maxwell {

// Analytic diagonal refractive-index profiles with closed-form x/y
// derivatives. The profile shape applies to a chosen subset of the three
// index components; the others stay at `base`.
struct IndexProfile {
  enum class Shape { Uniform, LinearRamp, TanhInterface, GaussianLens };

  Shape shape = Shape::Uniform;
  bool apply_x = true, apply_y = true, apply_z = true;
  double base = 1.0;
  double delta = 0.0;     // profile strength (ramp/tanh/lens)
  double center_x = 0.0;
  double center_y = 0.0;
  double width = 1.0;     // tanh/lens length scale
  double slope_x = 0.0;   // ramp gradients
  double slope_y = 0.0;

  double value(double x, double y) const;
  double ddx(double x, double y) const;
  double ddy(double x, double y) const;

  static IndexProfile uniform(double n) {
    IndexProfile p;
    p.base = n;
    return p;
  }
};

enum class DerivMode { Analytic, CentralDifference };

// Per-site (n_x, n_y, n_z) with spatial derivative planes, used to build the
// collision angles theta_i = eps / (4 n_i) and the potential angles
// beta = eps^2 (dn/d.) / n^2.
class RefractiveIndexField {
 public:
  static RefractiveIndexField from_profile(const IndexProfile& profile,
                                           Extents dims, double epsilon,
                                           DerivMode mode,
                                           double floor = 1e-3);
  // planes[axis] are row-major n values; derivatives by central difference.
  static RefractiveIndexField from_planes(std::vector<std::vector<double>> n,
                                          Extents dims, double epsilon,
                                          double floor = 1e-3);

  const Extents& dims() const { return dims_; }
  std::size_t sites() const { return dims_.sites(); }
  double floor() const { return floor_; }
  bool uniform() const { return uniform_; }

  // axis: 0 = n_x, 1 = n_y, 2 = n_z
  const std::vector<double>& n(int axis) const { return n_[axis]; }
  const std::vector<double>& dndx(int axis) const { return dndx_[axis]; }
  const std::vector<double>& dndy(int axis) const { return dndy_[axis]; }

 private:
  void validate_floor() const;
  void central_differences(double epsilon);
  void detect_uniform();

  Extents dims_;
  double floor_ = 1e-3;
  bool uniform_ = false;
  std::vector<double> n_[3];
  std::vector<double> dndx_[3];
  std::vector<double> dndy_[3];
};

}  // namespace qla::maxwell
