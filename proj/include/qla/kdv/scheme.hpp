#pragma once

#include <cstddef>
#include <vector>

#include "qla/amplitude_field.hpp"
#include "qla/local_operator.hpp"
#include "qla/parallel.hpp"
#include "qla/program.hpp"

namespace qla::kdv {

// The three KdV lattice schemes. All advance physical time by eps^3 per
// step. The non-unitary variant closes each step with the potential matrix
// V_pot; the two unitary variants fold the nonlinearity into the collision
// angle alpha1 = pi/4 + eps^2 m1 and differ in their stream interleaving:
//
//   NonUnitaryPotential:
//     Q <- V_pot . S0+ C . S1- C^T . S0- C . S1+ C^T
//              . S0- C^T . S1+ C . S0+ C^T . S1- C . Q
//   UnitaryV1:
//     Q <- S0- C1 . S0+ C1 . S1+ C1 . S1- C1^T
//              . S0- C1^T . S0+ C1^T . S1+ C1^T . S1- C1 . Q
//   UnitaryV2:
//     Q <- C1 S0- . C1 S1+ . C1 S0- . C1 S1+
//              . C1^T S0+ . C1^T S1- . C1^T S0+ . C1^T S1- . Q
//
// (rightmost factor applies first; S_i shifts component i along x).
enum class Variant { NonUnitaryPotential, UnitaryV1, UnitaryV2 };

const char* to_string(Variant v);

// Operator-table slots used by the programs.
enum OpId : int { kCollide = 0, kCollideT = 1, kVpot = 2 };

// Step program in application order.
Program program(Variant variant);

// Operator structures (shared with the symbolic expansion).
OpStructure collision_structure();  // [[cos, sin], [-sin, cos]]
OpStructure vpot_structure();       // [[cos, -sin], [-sin, cos]]

// Default target nonlinearity coefficient, chosen so the default rules are
// m1 = psi (V1), m1 = -psi (V2) and m = d(psi)/dx (non-unitary).
double default_a_target(Variant variant);  // 6, 6, 1

// Nonlinearity rule, scaled so the certified continuum limit carries the
// nonlinearity a_target * psi * psi_x:
//   UnitaryV1:           m1 = (a_target/6) psi
//   UnitaryV2:           m1 = -(a_target/6) psi
//   NonUnitaryPotential: m  = a_target * d(psi)/dx  (central difference)
// The /6 is certified: the streamed collision angle contributes
// 4 m1 psi_x + 2 psi d(m1)/dx, which closes to 6 k psi psi_x for m1 = k psi.
// (For V2 the certified gradient term is 4 q0 d(m1)/dx, so its limit closes
// in psi only up to the q0 - q1 imbalance.)
std::vector<double> nonlinearity_field(Variant variant,
                                       const std::vector<double>& psi,
                                       double epsilon, double a_target);

// Collision operator for the variant: a 2x2 rotation with angle
// alpha1 = pi/4 + eps^2 m1 (unitary variants) or exactly pi/4
// (NonUnitaryPotential, where m_field is ignored).
LocalOperator build_collision(Variant variant,
                              const std::vector<double>& m_field,
                              double epsilon);

// Potential operator [[cos a, -sin a], [-sin a, cos a]] with
// a = eps^3 * central-difference d(psi)/dx. Intentionally non-orthogonal.
LocalOperator build_vpot(const std::vector<double>& psi, double epsilon);

// Effective continuum coefficients of the recovered KdV equation
// psi_t + a psi psi_x + b psi_xxx = 0.
struct Coefficients {
  double a;
  double b;
};
Coefficients effective_coefficients(Variant variant, double a_target = 0.0);

std::vector<double> psi_field(const AmplitudeField& field);

struct SchemeConfig {
  Variant variant = Variant::UnitaryV1;
  double epsilon = 0.05;
  std::size_t sites = 0;
  double a_target = 0.0;  // 0: default_a_target(variant)
};

class Stepper {
 public:
  Stepper(SchemeConfig cfg, const ParallelExecutor& pool);

  // One discrete time advance (dt = eps^3). The unitary variants compute
  // the collision angle field from psi at step entry and hold it fixed
  // within the step. The non-unitary variant evaluates V_pot on the psi
  // reached after the collide-stream interleave (equivalent through
  // eps^4 -- the interleave changes psi at O(eps^3) -- and, unlike the
  // step-entry evaluation, free of a parasitic high-k feedback
  // instability that grows like exp(T/eps)).
  void step(AmplitudeField& field);

  double dt() const { return cfg_.epsilon * cfg_.epsilon * cfg_.epsilon; }
  const SchemeConfig& config() const { return cfg_; }

 private:
  SchemeConfig cfg_;
  SequenceExecutor exec_;
  Program prog_;
  std::shared_ptr<const LocalOperator> fixed_collide_;
  std::shared_ptr<const LocalOperator> fixed_collide_t_;
};

}  // namespace qla::kdv
