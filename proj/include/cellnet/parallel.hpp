#pragma once

// Minimal deterministic work splitter: divides [0, total) into contiguous
// chunks, one per worker thread.  Callers merge per-chunk results in chunk
// order, so output never depends on the thread count.

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace cellnet {

inline unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw != 0 ? hw : 1;
}

// fn(chunk_index, begin, end) is invoked once per chunk; chunk_index is
// dense in [0, chunk_count).  Returns the number of chunks used.
template <typename Fn>
std::size_t parallel_chunks(std::size_t total, unsigned jobs, Fn&& fn) {
  unsigned workers = resolve_jobs(jobs);
  std::size_t chunks =
      std::min<std::size_t>(total, static_cast<std::size_t>(workers));
  if (chunks <= 1) {
    if (total > 0) fn(std::size_t{0}, std::size_t{0}, total);
    return total > 0 ? 1 : 0;
  }
  std::vector<std::thread> pool;
  std::size_t per = total / chunks, extra = total % chunks, begin = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t len = per + (c < extra ? 1 : 0);
    pool.emplace_back(
        [&fn, c, begin, len] { fn(c, begin, begin + len); });
    begin += len;
  }
  for (std::thread& t : pool) t.join();
  return chunks;
}

}  // namespace cellnet
