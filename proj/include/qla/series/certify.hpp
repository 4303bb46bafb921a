#pragma once

#include <string>
#include <vector>

#include "qla/series/truncated_series.hpp"

namespace qla::series {

// One certified combination (a component, or a sum like psi = q0 + q1).
// `actual` is the expanded one-step result, `initial` the same combination
// of the untouched input atoms, `rhs` the exact polynomial the eps^k
// coefficient of (actual - initial) must equal.
struct ComponentTarget {
  std::string name;
  TruncatedSeries actual;
  TruncatedSeries initial;
  AtomPolynomial rhs;
};

struct OrderResult {
  int order = 0;
  bool checked = false;       // gating order (residual must vanish)
  bool target_order = false;  // rhs subtracted at this order
  bool pass = true;
  std::string residual;       // canonical form, "0" when empty
};

struct ComponentReport {
  std::string name;
  std::vector<OrderResult> orders;
  bool basis_mismatch = false;  // residual atoms outside the target basis
  bool pass = true;
};

struct CertificationReport {
  std::string scheme;
  std::vector<ComponentReport> components;
  std::vector<std::string> notes;

  bool passed() const;
  std::string to_text() const;
};

// Verifies that (actual - initial) vanishes identically at every order
// below `order_k`, equals rhs at `order_k`, and vanishes at each order in
// `required_zero_above`. Remaining orders up to eps^4 are reported without
// gating. Deterministic: canonical polynomial order only.
CertificationReport certify_pde(const std::string& scheme,
                                const std::vector<ComponentTarget>& targets,
                                int order_k,
                                const std::vector<int>& required_zero_above);

}  // namespace qla::series
