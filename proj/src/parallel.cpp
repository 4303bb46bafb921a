#include "qla/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qla {

ParallelExecutor::ParallelExecutor(unsigned workers)
    : workers_(workers == 0 ? 1 : workers) {
  for (unsigned id = 1; id < workers_; ++id) {
    threads_.emplace_back([this, id] { worker_loop(id); });
  }
}

ParallelExecutor::~ParallelExecutor() {
  {
    std::lock_guard<std::mutex> lock(mu_);
    stop_ = true;
    ++generation_;
  }
  cv_start_.notify_all();
  for (auto& t : threads_) t.join();
}

void ParallelExecutor::for_range(std::size_t n, const RangeFn& fn) const {
  if (n == 0) return;
  // Small jobs and single-worker pools run inline; the result is identical
  // either way because every partition writes disjoint output.
  if (workers_ == 1 || n < 2 * workers_) {
    fn(0, n);
    return;
  }
  {
    std::lock_guard<std::mutex> lock(mu_);
    job_ = &fn;
    job_n_ = n;
    pending_ = workers_ - 1;
    ++generation_;
  }
  cv_start_.notify_all();

  // Chunk 0 runs on the calling thread.
  const std::size_t chunk = (n + workers_ - 1) / workers_;
  fn(0, chunk < n ? chunk : n);

  std::unique_lock<std::mutex> lock(mu_);
  cv_done_.wait(lock, [this] { return pending_ == 0; });
  job_ = nullptr;
}

void ParallelExecutor::worker_loop(unsigned id) {
  std::size_t seen = 0;
  for (;;) {
    const RangeFn* fn = nullptr;
    std::size_t n = 0;
    {
      std::unique_lock<std::mutex> lock(mu_);
      cv_start_.wait(lock, [&] { return stop_ || generation_ != seen; });
      seen = generation_;
      if (stop_) return;
      fn = job_;
      n = job_n_;
    }
    if (fn != nullptr) {
      const std::size_t chunk = (n + workers_ - 1) / workers_;
      const std::size_t begin = std::min(n, id * chunk);
      const std::size_t end = std::min(n, begin + chunk);
      if (begin < end) (*fn)(begin, end);
      {
        std::lock_guard<std::mutex> lock(mu_);
        --pending_;
      }
      cv_done_.notify_one();
    }
  }
}

unsigned ParallelExecutor::worker_count_from_env(unsigned fallback) {
  const char* v = std::getenv("QLA_WORKERS");
  if (v == nullptr || *v == '\0') return fallback;
  const long n = std::strtol(v, nullptr, 10);
  if (n < 1 || n > 1024) return fallback;
  return static_cast<unsigned>(n);
}

}  // namespace qla
