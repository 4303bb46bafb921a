#include "qla/maxwell/scheme.hpp"

#include "qla/errors.hpp"

namespace qla::maxwell {

OpStructure cx_structure() {
  // angle slots: 0 = theta1, 1 = theta2
  OpStructure s = OpStructure::identity(OpStructure::Kind::Collision, 6, 2);
  s.add_rotation(1, 5, 0, -1);  // row1: cos t1 @1, -sin t1 @5
  s.add_rotation(2, 4, 1, -1);  // row2: cos t2 @2, -sin t2 @4
  return s;
}

OpStructure cy_structure() {
  // angle slots: 0 = theta0, 1 = theta2
  OpStructure s = OpStructure::identity(OpStructure::Kind::Collision, 6, 2);
  s.add_rotation(0, 5, 0, +1);  // row0: cos t0 @0, +sin t0 @5
  s.add_rotation(2, 3, 1, +1);  // row2: cos t2 @2, +sin t2 @3
  return s;
}

OpStructure vx_structure() {
  // angle slots: 0 = beta2, 1 = beta0.
  // Rows 4 and 5 are the printed shear rows. Rows 1 and 2 carry the
  // antisymmetric mirror entries with unit diagonals; the collide-stream
  // sequences supply exactly half of every index-gradient term, so the
  // electric-field rows need the other half as much as the magnetic ones.
  // The certification suite pins this completed form (and the half-strength
  // beta angles); without it the q1/q2 component equations cannot close.
  // Unit diagonals on rows 1, 2 leave V*V^T - I = O(beta^2): sparse but
  // not orthogonal.
  OpStructure s = OpStructure::identity(OpStructure::Kind::Potential, 6, 2);
  s.rows[1].sins.push_back({5, -1, 1});  // row1: 1 @1, -sin b0 @5
  s.rows[2].sins.push_back({4, +1, 0});  // row2: 1 @2, +sin b2 @4
  s.add_shear_row(4, 2, 0, -1);          // row4: -sin b2 @2, cos b2 @4
  s.add_shear_row(5, 1, 1, +1);          // row5: +sin b0 @1, cos b0 @5
  return s;
}

OpStructure vy_structure(int row3_sign) {
  // angle slots: 0 = beta3, 1 = beta1. Same completed form as V_X; the
  // row-0 entry sits exactly where the scheme definition prints a stray
  // "o" at column 5.
  OpStructure s = OpStructure::identity(OpStructure::Kind::Potential, 6, 2);
  s.rows[0].sins.push_back({5, +1, 1});           // row0: 1 @0, +sin b1 @5
  s.rows[2].sins.push_back({3, -row3_sign, 0});   // row2: 1 @2, -sin b3 @3
  s.add_shear_row(3, 2, 0, row3_sign);            // row3: +sin b3 @2, cos b3 @3
  s.add_shear_row(5, 0, 1, -1);                   // row5: -sin b1 @0, cos b1 @5
  return s;
}

namespace {

// S^+ in the scheme notation samples from the positive axis direction:
// out(r) = in(r + eps), i.e. core StreamSpec direction -1 (same mapping as
// the KdV schemes; pinned by the certified continuum limits).
ProgStep s14(int d) { return ProgStep::stream_step({1, 4}, Axis::X, -d); }
ProgStep s25x(int d) { return ProgStep::stream_step({2, 5}, Axis::X, -d); }
ProgStep s03(int d) { return ProgStep::stream_step({0, 3}, Axis::Y, -d); }
ProgStep s25y(int d) { return ProgStep::stream_step({2, 5}, Axis::Y, -d); }

}  // namespace

Program program() {
  // Product order, exactly as the step is defined:
  // V_Y . V_X . U_Y . U_X, each U a 16-factor interleave.
  Program p;
  p.push_back(ProgStep::potential(kVY));
  p.push_back(ProgStep::potential(kVX));
  // U_Y
  p.push_back(s25y(+1));
  p.push_back(ProgStep::collide(kCYT));
  p.push_back(s25y(-1));
  p.push_back(ProgStep::collide(kCY));
  p.push_back(s03(-1));
  p.push_back(ProgStep::collide(kCYT));
  p.push_back(s03(+1));
  p.push_back(ProgStep::collide(kCY));
  p.push_back(s25y(-1));
  p.push_back(ProgStep::collide(kCY));
  p.push_back(s25y(+1));
  p.push_back(ProgStep::collide(kCYT));
  p.push_back(s03(+1));
  p.push_back(ProgStep::collide(kCY));
  p.push_back(s03(-1));
  p.push_back(ProgStep::collide(kCYT));
  // U_X
  p.push_back(s25x(+1));
  p.push_back(ProgStep::collide(kCXT));
  p.push_back(s25x(-1));
  p.push_back(ProgStep::collide(kCX));
  p.push_back(s14(-1));
  p.push_back(ProgStep::collide(kCXT));
  p.push_back(s14(+1));
  p.push_back(ProgStep::collide(kCX));
  p.push_back(s25x(-1));
  p.push_back(ProgStep::collide(kCX));
  p.push_back(s25x(+1));
  p.push_back(ProgStep::collide(kCXT));
  p.push_back(s14(+1));
  p.push_back(ProgStep::collide(kCX));
  p.push_back(s14(-1));
  p.push_back(ProgStep::collide(kCXT));
  return from_product_order(std::move(p));
}

namespace {

AngleField theta_field(AngleLabel label, const RefractiveIndexField& idx,
                       int axis, double epsilon) {
  AngleField f(label, idx.sites(), 0.0);
  const auto& n = idx.n(axis);
  for (std::size_t s = 0; s < n.size(); ++s) {
    f.values[s] = epsilon / (4.0 * n[s]);
  }
  return f;
}

// beta = (eps^2 / 2) * (d n_axis / d dir) / n_axis^2. The half strength is
// certified: the collide-stream sequences already produce half of each
// index-gradient term, and the potentials supply the remainder.
AngleField beta_field(AngleLabel label, const RefractiveIndexField& idx,
                      int axis, int dir_axis, double epsilon) {
  AngleField f(label, idx.sites(), 0.0);
  const auto& n = idx.n(axis);
  const auto& dn = dir_axis == 0 ? idx.dndx(axis) : idx.dndy(axis);
  const double half_e2 = 0.5 * epsilon * epsilon;
  for (std::size_t s = 0; s < n.size(); ++s) {
    f.values[s] = half_e2 * dn[s] / (n[s] * n[s]);
  }
  return f;
}

}  // namespace

LocalOperator build_cx(const SchemeConfig& cfg) {
  return LocalOperator(
      cx_structure(),
      {theta_field(AngleLabel::Theta1, cfg.index, 1, cfg.epsilon),
       theta_field(AngleLabel::Theta2, cfg.index, 2, cfg.epsilon)});
}

LocalOperator build_cy(const SchemeConfig& cfg) {
  return LocalOperator(
      cy_structure(),
      {theta_field(AngleLabel::Theta0, cfg.index, 0, cfg.epsilon),
       theta_field(AngleLabel::Theta2, cfg.index, 2, cfg.epsilon)});
}

LocalOperator build_vx(const SchemeConfig& cfg) {
  return LocalOperator(
      vx_structure(),
      {beta_field(AngleLabel::Beta2, cfg.index, 2, 0, cfg.epsilon),
       beta_field(AngleLabel::Beta0, cfg.index, 1, 0, cfg.epsilon)});
}

LocalOperator build_vy(const SchemeConfig& cfg) {
  return LocalOperator(
      vy_structure(),
      {beta_field(AngleLabel::Beta3, cfg.index, 2, 1, cfg.epsilon),
       beta_field(AngleLabel::Beta1, cfg.index, 0, 1, cfg.epsilon)});
}

Stepper::Stepper(SchemeConfig cfg, const ParallelExecutor& pool)
    : cfg_(std::move(cfg)), exec_(pool) {
  if (cfg_.grid.nx < 4 || cfg_.grid.ny < 4) {
    throw ConfigError("maxwell: grid extents must be >= 4");
  }
  if (cfg_.index.dims() != cfg_.grid) {
    throw ConfigError("maxwell: index field extents do not match grid");
  }
  if (!(cfg_.epsilon > 0.0 && cfg_.epsilon < 1.0)) {
    throw ConfigError("maxwell: epsilon must satisfy 0 < epsilon < 1");
  }

  // The index field is static, so all operators materialize once.
  std::vector<std::shared_ptr<const LocalOperator>> table(kOpCount);
  table[kCX] = std::make_shared<LocalOperator>(build_cx(cfg_));
  table[kCXT] = std::make_shared<LocalOperator>(table[kCX]->transposed());
  table[kCY] = std::make_shared<LocalOperator>(build_cy(cfg_));
  table[kCYT] = std::make_shared<LocalOperator>(table[kCY]->transposed());
  table[kVX] = std::make_shared<LocalOperator>(build_vx(cfg_));
  table[kVY] = std::make_shared<LocalOperator>(build_vy(cfg_));

  for (const auto& ps : program()) {
    switch (ps.kind) {
      case ProgStep::Kind::Collide:
        seq_.steps.push_back(CollideStep{table[ps.op_id]});
        break;
      case ProgStep::Kind::Potential:
        seq_.steps.push_back(PotentialStep{table[ps.op_id]});
        break;
      case ProgStep::Kind::Stream:
        seq_.steps.push_back(StreamStep{ps.stream});
        break;
    }
  }
}

void Stepper::step(AmplitudeField& field) {
  if (field.ncomp() != 6 || field.dims() != cfg_.grid) {
    throw ConfigError("maxwell step: field shape mismatch");
  }
  exec_.apply(seq_, field);
}

}  // namespace qla::maxwell
