#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace rblab {

// Worker cap: RBLAB_THREADS if set, else min(hardware, 8). Thread count never
// influences numeric results -- work is split by index and merged in index
// order -- it only bounds wall time.
inline int worker_count() {
  if (const char* env = std::getenv("RBLAB_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return static_cast<int>(hw < 8 ? hw : 8);
}

// f(i) for i in [0, n); each i must write only its own output slot.
template <class F>
void parallel_for(int n, F&& f) {
  int workers = worker_count();
  if (workers <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  if (workers > n) workers = n;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) f(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace rblab
