#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace rmm {

struct ExecPolicy {
  unsigned threads = 0;  // 0: RM_METRIC_THREADS, else hardware concurrency
  std::function<void(const std::string&)> progress;
};

unsigned resolve_threads(unsigned requested);

// Runs body(begin, end, worker) over [0, count) in chunks of `grain`, claimed
// in increasing order. Rethrows the first exception raised by a worker.
void parallel_chunks(std::uint64_t count, std::uint64_t grain, const ExecPolicy& policy,
                     const std::string& label,
                     const std::function<void(std::uint64_t, std::uint64_t, unsigned)>& body);

}  // namespace rmm
