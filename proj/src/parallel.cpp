// Copyright 2026 The adaptlab Authors
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

#include "adaptlab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace adaptlab {
namespace {

int initial_worker_count() {
  if (const char* env = std::getenv("ADAPTLAB_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
      // Malformed value: ignore and use the default.
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::atomic<int>& worker_slot() {
  static std::atomic<int> slot{initial_worker_count()};
  return slot;
}

}  // namespace

int worker_count() { return worker_slot().load(std::memory_order_relaxed); }

void set_worker_count(int n) { worker_slot().store(n < 1 ? 1 : n, std::memory_order_relaxed); }

}  // namespace adaptlab
