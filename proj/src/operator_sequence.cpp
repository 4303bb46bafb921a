#include "qla/operator_sequence.hpp"

#include <algorithm>
#include <string>

#include "qla/errors.hpp"

namespace qla {

OperatorSequence OperatorSequence::from_product(
    std::vector<OperatorStep> product_order) {
  std::reverse(product_order.begin(), product_order.end());
  return OperatorSequence{std::move(product_order)};
}

void validate_stream_spec(const StreamSpec& spec, const AmplitudeField& field) {
  if (spec.direction != 1 && spec.direction != -1) {
    throw ConfigError("stream: direction must be +1 or -1");
  }
  if (spec.components.empty()) {
    throw ConfigError("stream: empty component set");
  }
  for (int c : spec.components) {
    if (c < 0 || c >= field.ncomp()) {
      throw ConfigError("stream: component index " + std::to_string(c) +
                        " out of range for ncomp " +
                        std::to_string(field.ncomp()));
    }
  }
  if (spec.axis == Axis::Y && field.dims().ny < 2) {
    throw ConfigError("stream: y axis requires ny >= 2");
  }
}

void SequenceExecutor::apply_local(const LocalOperator& op,
                                   AmplitudeField& field) {
  if (op.ncomp() != field.ncomp()) {
    throw ConfigError("collide: operator ncomp " + std::to_string(op.ncomp()) +
                      " does not match field ncomp " +
                      std::to_string(field.ncomp()));
  }
  if (op.sites() != field.sites()) {
    throw ConfigError("collide: operator built for " +
                      std::to_string(op.sites()) + " sites, field has " +
                      std::to_string(field.sites()));
  }
  const int n = field.ncomp();
  const std::size_t sites = field.sites();
  if (scratch_.size() != static_cast<std::size_t>(n) ||
      (n > 0 && scratch_[0].size() != sites)) {
    scratch_.assign(n, std::vector<double>(sites));
  }

  // Flatten the structure into (row, col, plane, sign) triples the kernel
  // iterates per site. Diagonal cos entries come first per row.
  struct Term {
    int row, col;
    const double* plane;
    double sign;
  };
  std::vector<Term> terms;
  for (int r = 0; r < n; ++r) {
    const auto& row = op.structure().rows[r];
    if (row.cos_angle >= 0) {
      terms.push_back({r, r, op.cos_plane(row.cos_angle).data(), 1.0});
    } else {
      terms.push_back({r, r, nullptr, 1.0});
    }
    for (const auto& s : row.sins) {
      terms.push_back(
          {r, s.col, op.sin_plane(s.angle).data(), static_cast<double>(s.sign)});
    }
  }

  const double* in[8];
  double* out[8];
  for (int c = 0; c < n; ++c) {
    in[c] = field.plane(c).data();
    out[c] = scratch_[c].data();
  }

  pool_->for_range(sites, [&](std::size_t begin, std::size_t end) {
    double acc[8];
    for (std::size_t s = begin; s < end; ++s) {
      for (int c = 0; c < n; ++c) acc[c] = 0.0;
      for (const auto& t : terms) {
        const double entry = t.plane == nullptr ? t.sign : t.sign * t.plane[s];
        acc[t.row] += entry * in[t.col][s];
      }
      for (int c = 0; c < n; ++c) out[c][s] = acc[c];
    }
  });

  for (int c = 0; c < n; ++c) field.swap_plane(c, scratch_[c]);
}

void SequenceExecutor::apply_stream(const StreamSpec& spec,
                                    AmplitudeField& field) {
  validate_stream_spec(spec, field);
  const std::size_t nx = field.dims().nx;
  const std::size_t ny = field.dims().ny;
  const std::size_t sites = field.sites();
  if (stream_scratch_.size() != sites) stream_scratch_.resize(sites);

  for (int c : spec.components) {
    const double* src = field.plane(c).data();
    double* dst = stream_scratch_.data();
    if (spec.axis == Axis::X) {
      // out[y][x] = in[y][x - dir]
      pool_->for_range(ny, [&](std::size_t rb, std::size_t re) {
        for (std::size_t y = rb; y < re; ++y) {
          const double* row = src + y * nx;
          double* orow = dst + y * nx;
          if (spec.direction > 0) {
            orow[0] = row[nx - 1];
            for (std::size_t x = 1; x < nx; ++x) orow[x] = row[x - 1];
          } else {
            for (std::size_t x = 0; x + 1 < nx; ++x) orow[x] = row[x + 1];
            orow[nx - 1] = row[0];
          }
        }
      });
    } else {
      // out[y][x] = in[y - dir][x]
      pool_->for_range(ny, [&](std::size_t rb, std::size_t re) {
        for (std::size_t y = rb; y < re; ++y) {
          const std::size_t ysrc =
              spec.direction > 0 ? (y + ny - 1) % ny : (y + 1) % ny;
          const double* row = src + ysrc * nx;
          double* orow = dst + y * nx;
          for (std::size_t x = 0; x < nx; ++x) orow[x] = row[x];
        }
      });
    }
    field.swap_plane(c, stream_scratch_);
  }
}

void SequenceExecutor::apply(const OperatorStep& step, AmplitudeField& field) {
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, StreamStep>) {
          apply_stream(s.spec, field);
        } else {
          apply_local(*s.op, field);
        }
      },
      step);
}

void SequenceExecutor::apply(const OperatorSequence& seq,
                             AmplitudeField& field) {
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    try {
      apply(seq.steps[i], field);
    } catch (const ConfigError& e) {
      throw ConfigError("sequence step " + std::to_string(i) + ": " + e.what());
    } catch (const NumericError& e) {
      throw NumericError("sequence step " + std::to_string(i) + ": " + e.what());
    }
  }
}

}  // namespace qla
