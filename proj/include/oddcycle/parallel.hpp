#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace oddcycle {

/// Runs work(shard) for shard = 0..shards-1 on up to `threads` workers and
/// returns the results indexed by shard. The shard count, not the thread
/// count, fixes the partition, so merged output does not depend on threads.
template <typename Result, typename Work>
std::vector<Result> run_shards(int shards, int threads, Work work) {
  std::vector<Result> results(shards);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int s = next++; s < shards; s = next++) {
      try {
        results[s] = work(s);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int count = std::clamp(threads, 1, shards);
  if (count == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(count);
    for (int i = 0; i < count; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace oddcycle
