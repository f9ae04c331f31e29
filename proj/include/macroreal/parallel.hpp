// parallel.hpp
// Execution selection for the data-parallel kernels. Every kernel has a
// serial reference path that produces bit-identical results.

#pragma once

namespace macroreal {

enum class Exec { Serial, Parallel };

bool openmp_enabled();

// Caps OpenMP workers; 0 restores the runtime default.
void set_worker_count(int workers);

// Applies MACROREAL_THREADS if set. Returns false on a malformed value.
bool apply_thread_env();

int worker_count();

}  // namespace macroreal
