/*
 * Copyright 2026 The lowdisc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LOWDISC_PARALLEL_HPP
#define LOWDISC_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace lowdisc {

/// Worker count: LOWDISC_THREADS if set, otherwise hardware concurrency.
inline int thread_count() {
  if (const char* env = std::getenv("LOWDISC_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return std::min(n, 256);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Run fn(begin, end, worker) over a static partition of [0, n).
/// Results must be combined order-independently by the caller (integer sums
/// here are exact, so any schedule yields identical output).
template <typename Fn>
void parallel_blocks(std::int64_t n, Fn&& fn) {
  int workers = std::min<std::int64_t>(thread_count(), std::max<std::int64_t>(n, 1));
  if (workers <= 1 || n < 2) {
    fn(std::int64_t{0}, n, 0);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::int64_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::int64_t b = w * chunk;
    std::int64_t e = std::min(n, b + chunk);
    if (b >= e) break;
    threads.emplace_back([&fn, b, e, w] { fn(b, e, w); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace lowdisc

#endif  // LOWDISC_PARALLEL_HPP
