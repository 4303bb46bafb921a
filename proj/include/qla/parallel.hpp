#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace qla {

// Persistent worker pool for site-range data parallelism.
//
// Every parallel kernel in this project is a pure map: each index range
// writes a disjoint slice of the destination buffer and reads only from
// source buffers. Results are therefore bitwise independent of the worker
// count; the pool exists purely for throughput. Reductions never go through
// the pool (see reductions.hpp for the fixed-order tree).
class ParallelExecutor {
 public:
  using RangeFn = std::function<void(std::size_t begin, std::size_t end)>;

  explicit ParallelExecutor(unsigned workers = 1);
  ~ParallelExecutor();

  ParallelExecutor(const ParallelExecutor&) = delete;
  ParallelExecutor& operator=(const ParallelExecutor&) = delete;

  unsigned workers() const { return workers_; }

  // Runs fn over a static partition of [0, n) and blocks until done.
  // With one worker (or tiny n) the call runs inline.
  void for_range(std::size_t n, const RangeFn& fn) const;

  // Reads the QLA_WORKERS environment variable; falls back to `fallback`.
  static unsigned worker_count_from_env(unsigned fallback);

 private:
  void worker_loop(unsigned id);

  unsigned workers_;
  std::vector<std::thread> threads_;

  mutable std::mutex mu_;
  mutable std::condition_variable cv_start_;
  mutable std::condition_variable cv_done_;
  mutable const RangeFn* job_ = nullptr;
  mutable std::size_t job_n_ = 0;
  mutable std::size_t generation_ = 0;
  mutable unsigned pending_ = 0;
  bool stop_ = false;
};

}  // namespace qla
