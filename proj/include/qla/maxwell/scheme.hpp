#pragma once

#include <memory>

#include "qla/amplitude_field.hpp"
#include "qla/local_operator.hpp"
#include "qla/maxwell/index_field.hpp"
#include "qla/parallel.hpp"
#include "qla/program.hpp"

namespace qla::maxwell {

// One time step of the 2D tensor-dielectric Maxwell scheme advances the
// 6-component field Q = (n_x E_x, n_y E_y, n_z E_z, H_x, H_y, H_z) by
//
//   Q <- V_Y . V_X . U_Y . U_X . Q          (dt = eps^2)
//
// with the interleaved collide-stream sequences (rightmost applies first)
//
//   U_X = S+x25 CX^T S-x25 CX S-x14 CX^T S+x14 CX
//         S-x25 CX  S+x25 CX^T S+x14 CX  S-x14 CX^T
//   U_Y = S+y25 CY^T S-y25 CY S-y03 CY^T S+y03 CY
//         S-y25 CY  S+y25 CY^T S+y03 CY  S-y03 CY^T
//
// Collision angles: theta0 = eps/(4 n_x), theta1 = eps/(4 n_y),
// theta2 = eps/(4 n_z). Potential angles (certified half strength; the
// collide-stream sequences produce half of every index-gradient term):
// beta0 = (eps^2/2)(dx n_y)/n_y^2, beta1 = (eps^2/2)(dy n_x)/n_x^2,
// beta2 = (eps^2/2)(dx n_z)/n_z^2, beta3 = (eps^2/2)(dy n_z)/n_z^2.

enum OpId : int { kCX = 0, kCXT, kCY, kCYT, kVX, kVY, kOpCount };

// Sign of the sin(beta3) entry in row 3 of V_Y, fixed by the symbolic
// certification suite (the identity-limit-consistent rotation form).
inline constexpr int kVyRow3Sign = +1;

// Operator structures (shared with the symbolic expansion).
OpStructure cx_structure();
OpStructure cy_structure();
OpStructure vx_structure();
OpStructure vy_structure(int row3_sign = kVyRow3Sign);

// Full step program in application order: U_X, U_Y, then V_X, V_Y.
Program program();

struct SchemeConfig {
  double epsilon = 0.05;
  Extents grid;
  RefractiveIndexField index;
};

// Per-site operators materialized from the index field.
LocalOperator build_cx(const SchemeConfig& cfg);
LocalOperator build_cy(const SchemeConfig& cfg);
LocalOperator build_vx(const SchemeConfig& cfg);
LocalOperator build_vy(const SchemeConfig& cfg);

class Stepper {
 public:
  Stepper(SchemeConfig cfg, const ParallelExecutor& pool);

  void step(AmplitudeField& field);

  double dt() const { return cfg_.epsilon * cfg_.epsilon; }
  const SchemeConfig& config() const { return cfg_; }
  // True when the medium is homogeneous (V_X = V_Y = I exactly).
  bool homogeneous() const { return cfg_.index.uniform(); }

 private:
  SchemeConfig cfg_;
  SequenceExecutor exec_;
  OperatorSequence seq_;
};

}  // namespace qla::maxwell
