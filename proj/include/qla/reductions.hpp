#pragma once

#include <cstddef>
#include <span>

namespace qla {

// Fixed-order pairwise tree reduction. Always evaluated in the same order
// regardless of worker count, so diagnostics built on it are bitwise
// reproducible run to run.
template <typename F>
double tree_sum(std::span<const double> v, F&& term) {
  struct Rec {
    static double sum(std::span<const double> v, F& f, std::size_t lo,
                      std::size_t hi) {
      if (hi - lo <= 8) {
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) acc += f(v[i]);
        return acc;
      }
      const std::size_t mid = lo + (hi - lo) / 2;
      return sum(v, f, lo, mid) + sum(v, f, mid, hi);
    }
  };
  if (v.empty()) return 0.0;
  return Rec::sum(v, term, 0, v.size());
}

inline double tree_sum(std::span<const double> v) {
  return tree_sum(v, [](double x) { return x; });
}

inline double tree_sum_squares(std::span<const double> v) {
  return tree_sum(v, [](double x) { return x * x; });
}

}  // namespace qla
