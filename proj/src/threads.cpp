#include "labcount/threads.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace labcount {

int thread_budget() {
  int budget = omp_get_max_threads();
  if (const char* env = std::getenv("LABCOUNT_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) budget = v;
    } catch (...) {
      // ignore unparsable values, keep the OpenMP default
    }
  }
  return budget < 1 ? 1 : budget;
}

}  // namespace labcount
