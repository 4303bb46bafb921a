#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "qla/amplitude_field.hpp"
#include "qla/local_operator.hpp"
#include "qla/parallel.hpp"

namespace qla {

enum class Axis : std::uint8_t { X, Y };

// Circular shift of selected components by exactly one lattice unit.
// direction +1 moves values toward increasing coordinate:
// out[j] = in[j - 1] (periodic).
struct StreamSpec {
  std::vector<int> components;
  Axis axis = Axis::X;
  int direction = +1;
};

struct CollideStep {
  std::shared_ptr<const LocalOperator> op;
};
struct StreamStep {
  StreamSpec spec;
};
struct PotentialStep {
  std::shared_ptr<const LocalOperator> op;
};

using OperatorStep = std::variant<CollideStep, StreamStep, PotentialStep>;

// Ordered program of collide / stream / potential steps. Steps are stored
// and executed in application order (element 0 first). Scheme definitions
// written as operator products apply right to left; use from_product to
// build from that notation.
struct OperatorSequence {
  std::vector<OperatorStep> steps;

  static OperatorSequence from_product(std::vector<OperatorStep> product_order);
};

// Executes sequences against amplitude fields. Owns scratch storage so the
// hot loop never allocates. Collide/potential are site-parallel pure maps;
// streaming writes a shifted copy into scratch and swaps planes. Results
// are bitwise independent of the worker count.
class SequenceExecutor {
 public:
  explicit SequenceExecutor(const ParallelExecutor& pool) : pool_(&pool) {}

  // Applies one step / a whole sequence in place.
  void apply(const OperatorStep& step, AmplitudeField& field);
  void apply(const OperatorSequence& seq, AmplitudeField& field);

 private:
  void apply_local(const LocalOperator& op, AmplitudeField& field);
  void apply_stream(const StreamSpec& spec, AmplitudeField& field);

  const ParallelExecutor* pool_;
  std::vector<std::vector<double>> scratch_;
  std::vector<double> stream_scratch_;
};

// Validates a stream spec against a field (component indices, axis extent).
void validate_stream_spec(const StreamSpec& spec, const AmplitudeField& field);

}  // namespace qla
