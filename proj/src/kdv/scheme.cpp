#include "qla/kdv/scheme.hpp"

#include <cmath>
#include <numbers>

#include "qla/errors.hpp"

namespace qla::kdv {

const char* to_string(Variant v) {
  switch (v) {
    case Variant::NonUnitaryPotential: return "non-unitary";
    case Variant::UnitaryV1: return "unitary-v1";
    case Variant::UnitaryV2: return "unitary-v2";
  }
  return "?";
}

namespace {

// S_i^+ in the scheme notation samples from +x: out(x) = in(x + eps),
// which is core StreamSpec direction -1. The certified continuum limits
// (and the soliton's +x propagation) pin this mapping.
ProgStep s0(int printed_dir) {
  return ProgStep::stream_step({0}, Axis::X, -printed_dir);
}
ProgStep s1(int printed_dir) {
  return ProgStep::stream_step({1}, Axis::X, -printed_dir);
}
ProgStep c() { return ProgStep::collide(kCollide); }
ProgStep ct() { return ProgStep::collide(kCollideT); }

}  // namespace

Program program(Variant variant) {
  // Written in product order (rightmost factor applies first), then
  // reversed. Within a factor like "S0+ C", C is the right factor.
  Program p;
  switch (variant) {
    case Variant::NonUnitaryPotential:
      p = {ProgStep::potential(kVpot),
           s0(+1), c(),  s1(-1), ct(), s0(-1), c(),  s1(+1), ct(),
           s0(-1), ct(), s1(+1), c(),  s0(+1), ct(), s1(-1), c()};
      break;
    case Variant::UnitaryV1:
      p = {s0(-1), c(),  s0(+1), c(),  s1(+1), c(),  s1(-1), ct(),
           s0(-1), ct(), s0(+1), ct(), s1(+1), ct(), s1(-1), c()};
      break;
    case Variant::UnitaryV2:
      p = {c(), s0(-1), c(),  s1(+1), c(),  s0(-1), c(),  s1(+1),
           ct(), s0(+1), ct(), s1(-1), ct(), s0(+1), ct(), s1(-1)};
      break;
  }
  return from_product_order(std::move(p));
}

double default_a_target(Variant variant) {
  return variant == Variant::NonUnitaryPotential ? 1.0 : 6.0;
}

std::vector<double> nonlinearity_field(Variant variant,
                                       const std::vector<double>& psi,
                                       double epsilon, double a_target) {
  if (a_target == 0.0) a_target = default_a_target(variant);
  const std::size_t n = psi.size();
  std::vector<double> m(n);
  switch (variant) {
    case Variant::UnitaryV1:
      for (std::size_t j = 0; j < n; ++j) m[j] = (a_target / 6.0) * psi[j];
      break;
    case Variant::UnitaryV2:
      for (std::size_t j = 0; j < n; ++j) m[j] = -(a_target / 6.0) * psi[j];
      break;
    case Variant::NonUnitaryPotential: {
      const double inv = a_target / (2.0 * epsilon);
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t prev = j == 0 ? n - 1 : j - 1;
        const std::size_t next = j + 1 == n ? 0 : j + 1;
        m[j] = (psi[next] - psi[prev]) * inv;
      }
      break;
    }
  }
  return m;
}

OpStructure collision_structure() {
  OpStructure s = OpStructure::identity(OpStructure::Kind::Collision, 2, 1);
  s.add_rotation(0, 1, 0, +1);  // [[cos, sin], [-sin, cos]]
  return s;
}

OpStructure vpot_structure() {
  OpStructure s = OpStructure::identity(OpStructure::Kind::Potential, 2, 1);
  s.add_shear_row(0, 1, 0, -1);  // [[cos, -sin], [-sin, cos]]
  s.add_shear_row(1, 0, 0, -1);
  return s;
}

LocalOperator build_collision(Variant variant,
                              const std::vector<double>& m_field,
                              double epsilon) {
  const double quarter_pi = std::numbers::pi / 4.0;
  AngleField alpha(AngleLabel::Alpha1, m_field.size(), quarter_pi);
  if (variant != Variant::NonUnitaryPotential) {
    const double e2 = epsilon * epsilon;
    for (std::size_t j = 0; j < m_field.size(); ++j) {
      alpha.values[j] = quarter_pi + e2 * m_field[j];
    }
  }
  return LocalOperator(collision_structure(), {std::move(alpha)});
}

LocalOperator build_vpot(const std::vector<double>& psi, double epsilon) {
  const auto m =
      nonlinearity_field(Variant::NonUnitaryPotential, psi, epsilon, 1.0);
  const double e3 = epsilon * epsilon * epsilon;
  AngleField alpha(AngleLabel::Alpha, m.size(), 0.0);
  for (std::size_t j = 0; j < m.size(); ++j) alpha.values[j] = e3 * m[j];
  return LocalOperator(vpot_structure(), {std::move(alpha)});
}

Coefficients effective_coefficients(Variant variant, double a_target) {
  if (a_target == 0.0) a_target = default_a_target(variant);
  return {a_target, 0.5};
}

std::vector<double> psi_field(const AmplitudeField& field) {
  const auto q0 = field.plane(0);
  const auto q1 = field.plane(1);
  std::vector<double> psi(field.sites());
  for (std::size_t j = 0; j < psi.size(); ++j) psi[j] = q0[j] + q1[j];
  return psi;
}

Stepper::Stepper(SchemeConfig cfg, const ParallelExecutor& pool)
    : cfg_(cfg), exec_(pool), prog_(program(cfg.variant)) {
  if (cfg_.sites < 4) {
    throw ConfigError("kdv: site count must be >= 4");
  }
  if (!(cfg_.epsilon > 0.0 && cfg_.epsilon < 1.0)) {
    throw ConfigError("kdv: epsilon must satisfy 0 < epsilon < 1");
  }
  if (cfg_.a_target == 0.0) cfg_.a_target = default_a_target(cfg_.variant);
  if (cfg_.variant == Variant::NonUnitaryPotential) {
    // The collision angle is exactly pi/4 at every site; build it once.
    fixed_collide_ = std::make_shared<LocalOperator>(
        build_collision(cfg_.variant, std::vector<double>(cfg_.sites, 0.0),
                        cfg_.epsilon));
    fixed_collide_t_ =
        std::make_shared<LocalOperator>(fixed_collide_->transposed());
  }
}

void Stepper::step(AmplitudeField& field) {
  if (field.ncomp() != 2 || field.sites() != cfg_.sites) {
    throw ConfigError("kdv step: field shape mismatch");
  }

  std::shared_ptr<const LocalOperator> collide = fixed_collide_;
  std::shared_ptr<const LocalOperator> collide_t = fixed_collide_t_;
  if (cfg_.variant != Variant::NonUnitaryPotential) {
    const auto m = nonlinearity_field(cfg_.variant, psi_field(field),
                                      cfg_.epsilon, cfg_.a_target);
    collide = std::make_shared<LocalOperator>(
        build_collision(cfg_.variant, m, cfg_.epsilon));
    collide_t = std::make_shared<LocalOperator>(collide->transposed());
  }

  for (const auto& ps : prog_) {
    switch (ps.kind) {
      case ProgStep::Kind::Collide:
        exec_.apply(CollideStep{ps.op_id == kCollide ? collide : collide_t},
                    field);
        break;
      case ProgStep::Kind::Potential: {
        // V_pot from the current (post-interleave) psi; d(a*psi) = a*d(psi).
        auto psi = psi_field(field);
        for (auto& v : psi) v *= cfg_.a_target;
        const auto vpot =
            std::make_shared<LocalOperator>(build_vpot(psi, cfg_.epsilon));
        exec_.apply(PotentialStep{vpot}, field);
        break;
      }
      case ProgStep::Kind::Stream:
        exec_.apply(StreamStep{ps.stream}, field);
        break;
    }
  }
}

}  // namespace qla::kdv
