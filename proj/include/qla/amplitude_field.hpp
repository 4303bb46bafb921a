#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qla {

// Lattice extents. 1D fields use ny == 1.
struct Extents {
  std::size_t nx = 0;
  std::size_t ny = 1;

  std::size_t sites() const { return nx * ny; }
  bool operator==(const Extents&) const = default;
};

// Periodic lattice of per-site real amplitude vectors (the qubit field Q).
// Storage is component-major: one contiguous plane per component, sites
// ordered row-major with x fastest. Streaming is then a contiguous rotate
// of a single plane.
class AmplitudeField {
 public:
  // epsilon is the lattice spatial unit; physical coordinate x = epsilon * j.
  AmplitudeField(Extents dims, int ncomp, double epsilon);

  const Extents& dims() const { return dims_; }
  int ncomp() const { return ncomp_; }
  std::size_t sites() const { return dims_.sites(); }
  double epsilon() const { return epsilon_; }

  std::span<double> plane(int comp) { return planes_[comp]; }
  std::span<const double> plane(int comp) const { return planes_[comp]; }

  double at(std::size_t site, int comp) const { return planes_[comp][site]; }
  double& at(std::size_t site, int comp) { return planes_[comp][site]; }

  std::size_t site_index(std::size_t ix, std::size_t iy = 0) const {
    return iy * dims_.nx + ix;
  }

  // Swaps the storage of one component plane (used by streaming).
  void swap_plane(int comp, std::vector<double>& other) {
    planes_[comp].swap(other);
  }

  bool all_finite() const;

  bool operator==(const AmplitudeField&) const = default;

 private:
  Extents dims_;
  int ncomp_;
  double epsilon_;
  std::vector<std::vector<double>> planes_;
};

// sqrt of the sum of squared amplitudes over all components, accumulated
// with the fixed-order pairwise tree.
double l2_norm(const AmplitudeField& field);

}  // namespace qla
