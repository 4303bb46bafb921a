#pragma once

#include <vector>

#include "qla/operator_sequence.hpp"

namespace qla {

// Scheme-neutral step program. Both the numeric stepper and the symbolic
// epsilon-expansion consume the same program, so the executed sequence and
// the certified sequence are one definition.
struct ProgStep {
  enum class Kind { Collide, Stream, Potential };
  Kind kind = Kind::Collide;
  int op_id = -1;     // index into the scheme's operator table
  StreamSpec stream;  // Kind::Stream only

  static ProgStep collide(int op_id) { return {Kind::Collide, op_id, {}}; }
  static ProgStep potential(int op_id) { return {Kind::Potential, op_id, {}}; }
  static ProgStep stream_step(std::vector<int> comps, Axis axis, int dir) {
    return {Kind::Stream, -1, StreamSpec{std::move(comps), axis, dir}};
  }
};

// Steps in application order (front() applies first).
using Program = std::vector<ProgStep>;

// Reverses a program written in operator-product order (rightmost factor
// applies first) into application order.
inline Program from_product_order(Program product) {
  std::reverse(product.begin(), product.end());
  return product;
}

}  // namespace qla
