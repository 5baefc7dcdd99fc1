#pragma once

#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace incgeo {

// Worker count from INCGEO_THREADS (default 1).
inline std::size_t worker_count() {
  const char* s = std::getenv("INCGEO_THREADS");
  if (!s || !*s) return 1;
  try {
    long v = std::stol(s);
    return v < 1 ? 1 : static_cast<std::size_t>(v);
  } catch (...) {
    return 1;
  }
}

// Calls fn(i) for i in [0, n), split into contiguous chunks across workers.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const std::size_t w = std::min(worker_count(), n / 64 + 1);
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(w);
  const std::size_t chunk = (n + w - 1) / w;
  for (std::size_t t = 0; t < w; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t * chunk; i < std::min(n, (t + 1) * chunk); ++i) fn(i);
      } catch (...) {
        errs[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

}  // namespace incgeo
