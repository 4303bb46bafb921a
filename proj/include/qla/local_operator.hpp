#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "qla/angle_field.hpp"

namespace qla {

// Structural description of a site-local operator: every row is either an
// identity row, or `cos(angle)` on the diagonal plus signed `sin(angle)`
// couplings to other components. This covers every collision and potential
// operator in the project, and it is shared verbatim by the numeric kernels
// and the symbolic epsilon-expansion, so the two routes cannot drift apart.
struct OpRow {
  struct SinTerm {
    int col = 0;
    int sign = +1;   // entry = sign * sin(angle)
    int angle = 0;   // index into the operator's angle set
  };
  int cos_angle = -1;  // -1: diagonal entry is exactly 1 (identity row)
  std::vector<SinTerm> sins;
};

struct OpStructure {
  enum class Kind { Collision, Potential };

  Kind kind = Kind::Collision;
  int ncomp = 0;
  int nangles = 0;
  std::vector<OpRow> rows;  // exactly ncomp entries

  // Structure of the transposed matrix (angles unchanged).
  OpStructure transposed() const;

  // Convenience: 2x2 rotation block on (i, j):
  //   row i: cos(angle)@i, sign*sin(angle)@j
  //   row j: -sign*sin(angle)@i, cos(angle)@j
  void add_rotation(int i, int j, int angle, int sign);
  // Potential-style row: row = sign*sin(angle)*q[src] + cos(angle)*q[row].
  void add_shear_row(int row, int src, int angle, int sign);

  static OpStructure identity(Kind kind, int ncomp, int nangles);
};

// A site-local operator with per-site matrices materialized from angle
// fields. Collision operators are validated to be orthogonal at every site
// (max-norm of M*M^T - I <= 1e-13); potential operators are not.
class LocalOperator {
 public:
  using Kind = OpStructure::Kind;

  // Angle fields must all have the same site count. For collision kind the
  // sin planes are derived from the cos planes via sqrt(1 - cos^2) (fma
  // form), which keeps cos^2 + sin^2 - 1 at the reduced level ~sin^2 * ulp
  // instead of ~ulp; the sign is taken from sin(angle).
  LocalOperator(OpStructure structure, std::vector<AngleField> angles);

  Kind kind() const { return structure_.kind; }
  int ncomp() const { return structure_.ncomp; }
  std::size_t sites() const { return sites_; }
  const OpStructure& structure() const { return structure_; }

  // Dense row-major ncomp x ncomp matrix at one site (for tests/diagnostics).
  std::vector<double> matrix_at(std::size_t site) const;
  // Same, into caller storage of at least ncomp*ncomp doubles.
  void matrix_into(std::size_t site, double* m) const;

  // max over sites of the max-norm of M*M^T - I.
  double max_orthogonality_defect() const;

  // Shares the angle planes; only the structure is transposed.
  LocalOperator transposed() const;

  // Kernel access: per-angle cos/sin planes.
  const std::vector<double>& cos_plane(int angle) const {
    return tables_->cos_planes[angle];
  }
  const std::vector<double>& sin_plane(int angle) const {
    return tables_->sin_planes[angle];
  }

 private:
  struct AngleTables {
    std::vector<AngleField> angles;
    std::vector<std::vector<double>> cos_planes;
    std::vector<std::vector<double>> sin_planes;
  };

  LocalOperator(OpStructure structure, std::shared_ptr<const AngleTables> t);
  void validate();

  OpStructure structure_;
  std::size_t sites_ = 0;
  std::shared_ptr<const AngleTables> tables_;
};

constexpr double kOrthogonalityTol = 1e-13;

}  // namespace qla
