#include "coslab/parallel.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

namespace coslab {
namespace {

std::atomic<int> g_cap{0};

int env_cap() {
  const char* s = std::getenv("COSLAB_THREADS");
  if (s == nullptr) return 0;
  try {
    return std::max(0, std::stoi(s));
  } catch (...) {
    return 0;
  }
}

}  // namespace

int thread_count() {
  int threads = omp_get_max_threads();
  const int cap = g_cap.load() > 0 ? g_cap.load() : env_cap();
  if (cap > 0) threads = std::min(threads, cap);
  return std::max(1, threads);
}

void set_thread_cap(int threads) { g_cap.store(std::max(0, threads)); }

}  // namespace coslab
