#include "qla/series/expansion.hpp"

#include <stdexcept>

namespace qla::series {

SeriesVector generic_initial_state(int ncomp) {
  SeriesVector state;
  state.reserve(ncomp);
  for (int c = 0; c < ncomp; ++c) {
    state.push_back(TruncatedSeries::atom(
        Atom{static_cast<AtomBase>(c), 0, 0}));
  }
  return state;
}

SeriesVector apply_symbolic(const SymbolicOperator& op, const SeriesVector& in) {
  const int n = op.structure.ncomp;
  if (static_cast<int>(in.size()) != n) {
    throw std::invalid_argument("apply_symbolic: component count mismatch");
  }
  SeriesVector out(in.size());
  for (int r = 0; r < n; ++r) {
    const auto& row = op.structure.rows[r];
    if (row.cos_angle < 0) {
      out[r] = in[r];
    } else {
      out[r] = op.angles[row.cos_angle].cos * in[r];
    }
    for (const auto& s : row.sins) {
      const TruncatedSeries contrib = op.angles[s.angle].sin * in[s.col];
      if (s.sign > 0) {
        out[r] += contrib;
      } else {
        out[r] -= contrib;
      }
    }
  }
  return out;
}

SeriesVector expand_sequence(const Program& prog,
                             const std::vector<SymbolicOperator>& ops,
                             SeriesVector state) {
  for (const auto& step : prog) {
    switch (step.kind) {
      case ProgStep::Kind::Collide:
      case ProgStep::Kind::Potential:
        state = apply_symbolic(ops.at(step.op_id), state);
        break;
      case ProgStep::Kind::Stream: {
        const ShiftAxis axis =
            step.stream.axis == Axis::X ? ShiftAxis::X : ShiftAxis::Y;
        for (int c : step.stream.components) {
          state.at(c) = stream_shift(state.at(c), axis, step.stream.direction);
        }
        break;
      }
    }
  }
  return state;
}

}  // namespace qla::series
