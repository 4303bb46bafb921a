#pragma once

#include <vector>

#include "qla/local_operator.hpp"
#include "qla/program.hpp"
#include "qla/series/truncated_series.hpp"

namespace qla::series {

// Symbolic counterpart of a LocalOperator: the shared structure plus one
// exact cos/sin series pair per angle slot.
struct SymbolicOperator {
  OpStructure structure;
  std::vector<TrigPair> angles;

  SymbolicOperator transposed() const {
    return {structure.transposed(), angles};
  }
};

using SeriesVector = std::vector<TruncatedSeries>;

// Generic symbolic field: component i starts as the bare atom q_i.
SeriesVector generic_initial_state(int ncomp);

// Applies one step / a program to a series state. Collide and potential
// steps are series matrix-vector products; stream steps Taylor-shift the
// listed components.
SeriesVector apply_symbolic(const SymbolicOperator& op, const SeriesVector& in);
SeriesVector expand_sequence(const Program& prog,
                             const std::vector<SymbolicOperator>& ops,
                             SeriesVector state);

}  // namespace qla::series
