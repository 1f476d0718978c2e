// Copyright 2026 The bhg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BHG_PARALLEL_SCAN_HPP
#define BHG_PARALLEL_SCAN_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace bhg {

// Finds the smallest m in [first, last] with accept(worker, m) true.
//
// The range is cut into fixed-size blocks handed out in increasing order.
// A worker stops claiming once its next block starts above the best accept
// seen so far; every block below the winning one has then been fully scanned
// by someone, so the result equals the sequential answer. `accept` is called
// concurrently with distinct worker ids in [0, workers).
template <typename Accept>
std::optional<std::uint64_t> find_first_accepting(std::uint64_t first,
                                                  std::uint64_t last,
                                                  unsigned workers,
                                                  Accept&& accept,
                                                  std::uint64_t block = 256) {
  if (first > last) return std::nullopt;
  if (workers <= 1) {
    for (std::uint64_t m = first;; ++m) {
      if (accept(0u, m)) return m;
      if (m == last) return std::nullopt;
    }
  }

  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  std::atomic<std::uint64_t> next_block{0};
  std::atomic<std::uint64_t> best{kNone};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const std::uint64_t span = last - first;  // inclusive range size minus one

  auto work = [&](unsigned id) {
    try {
      for (;;) {
        const std::uint64_t b = next_block.fetch_add(1);
        if (b > span / block) return;
        const std::uint64_t lo = first + b * block;
        if (lo >= best.load()) return;
        const std::uint64_t hi = lo + std::min(block - 1, last - lo);
        for (std::uint64_t m = lo;; ++m) {
          if (accept(id, m)) {
            std::uint64_t cur = best.load();
            while (m < cur && !best.compare_exchange_weak(cur, m)) {
            }
            return;
          }
          if (m == hi) break;
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  const auto found = best.load();
  return found == kNone ? std::nullopt : std::optional(found);
}

}  // namespace bhg

#endif  // BHG_PARALLEL_SCAN_HPP
