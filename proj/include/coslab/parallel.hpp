#pragma once

namespace coslab {

/// Thread count used by the OpenMP kernels: omp_get_max_threads(), capped by
/// the COSLAB_THREADS environment variable when it holds a positive integer.
int thread_count();

/// Overrides the cap for the rest of the process (0 restores the default).
void set_thread_cap(int threads);

}  // namespace coslab
