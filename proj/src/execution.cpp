#include "motif/execution.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace motif {

int omp_threads_default() {
  if (const char* env = std::getenv("MOTIF_KIT_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

}  // namespace motif
