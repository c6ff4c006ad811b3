#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "nakayama/checked.hpp"

namespace nakayama {

/// Worker count: hardware concurrency, capped by NAKAYAMA_CENSUS_THREADS.
unsigned worker_count();

/// sum_{i < count} term(i). Terms are claimed dynamically by up to
/// worker_count() threads; the sum is independent of the schedule.
template <class Term>
std::int64_t parallel_sum(std::size_t count, Term term) {
  const unsigned workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < count; ++i) total = checked::add(total, term(i));
    return total;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::int64_t> partial(workers, 0);
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) {
          partial[w] = checked::add(partial[w], term(i));
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::int64_t total = 0;
  for (auto p : partial) total = checked::add(total, p);
  return total;
}

}  // namespace nakayama
