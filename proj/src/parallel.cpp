#include "rmm/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rmm {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("RM_METRIC_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_chunks(std::uint64_t count, std::uint64_t grain, const ExecPolicy& policy,
                     const std::string& label,
                     const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& body) {
  if (count == 0) return;
  grain = std::max<std::uint64_t>(grain, 1);
  const std::uint64_t chunks = (count + grain - 1) / grain;
  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(policy.threads), chunks));

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> done{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex mu;
  int reported = 0;

  auto worker = [&](unsigned id) {
    for (;;) {
      if (failed.load(std::memory_order_relaxed)) return;
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      const std::uint64_t begin = c * grain;
      const std::uint64_t end = std::min(count, begin + grain);
      try {
        body(begin, end, id);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        failed = true;
        return;
      }
      const std::uint64_t finished = done.fetch_add(1) + 1;
      if (policy.progress) {
        const int pct = static_cast<int>(100 * finished / chunks);
        std::lock_guard lock(mu);
        if (pct / 10 > reported / 10) {
          reported = pct;
          policy.progress(label + ": " + std::to_string(pct) + "%");
        }
      }
    }
  };

  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker, i);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace rmm
