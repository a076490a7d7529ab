#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace grouplogic::detail {

// 0 means "library default" (all hardware threads under OpenMP, 1 otherwise).
inline int thread_count(int jobs) {
#ifdef _OPENMP
  return jobs > 0 ? jobs : omp_get_max_threads();
#else
  (void)jobs;
  return 1;
#endif
}

}  // namespace grouplogic::detail
