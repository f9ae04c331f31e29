#include "macroreal/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace macroreal {

#ifdef _OPENMP
namespace {
const int kDefaultWorkers = omp_get_max_threads();
}
#endif

bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

void set_worker_count(int workers) {
#ifdef _OPENMP
    omp_set_num_threads(workers > 0 ? workers : kDefaultWorkers);
#else
    (void)workers;
#endif
}

bool apply_thread_env() {
    const char* raw = std::getenv("MACROREAL_THREADS");
    if (raw == nullptr || *raw == '\0') return true;
    int workers = 0;
    const char* end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, workers);
    if (ec != std::errc{} || ptr != end || workers < 0) return false;
    set_worker_count(workers);
    return true;
}

int worker_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace macroreal
