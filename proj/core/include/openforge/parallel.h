// Copyright 2026 The OpenForge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OPENFORGE_PARALLEL_H_
#define OPENFORGE_PARALLEL_H_

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace openforge {

// Runs fn(i) for i in [0, n) on up to `threads` workers using contiguous
// chunks. fn must only write to slot i of its outputs; results are then
// independent of the thread count. The first exception is rethrown.
template <typename Fn>
void ParallelFor(int n, int threads, Fn &&fn) {
  threads = std::max(1, std::min(threads, n));
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> workers;
  const int chunk = (n + threads - 1) / threads;
  for (int w = 0; w < threads; ++w) {
    workers.emplace_back([&, w]() {
      try {
        for (int i = w * chunk; i < std::min(n, (w + 1) * chunk); ++i) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto &t : workers) t.join();
  for (auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace openforge

#endif  // OPENFORGE_PARALLEL_H_
