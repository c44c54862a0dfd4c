#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace qts {

// Splits [begin, end) into `threads` contiguous chunks and runs
// body(chunk_begin, chunk_end, worker_index) on each. The first exception
// thrown by any worker is rethrown after all workers join.
template <class Body>
void parallel_for(long begin, long end, unsigned threads, Body&& body) {
  const long n = end - begin;
  if (n <= 0) return;
  const long workers = std::clamp<long>(static_cast<long>(threads), 1, n);
  if (workers == 1) {
    body(begin, end, 0u);
    return;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (long w = 0; w < workers; ++w) {
    const long lo = begin + n * w / workers;
    const long hi = begin + n * (w + 1) / workers;
    pool.emplace_back([&, lo, hi, w] {
      try {
        body(lo, hi, static_cast<unsigned>(w));
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  pool.clear();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace qts
