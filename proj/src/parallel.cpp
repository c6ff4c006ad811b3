#include "nakayama/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace nakayama {

unsigned worker_count() {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("NAKAYAMA_CENSUS_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) workers = std::min<unsigned>(workers, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
      // Ignore malformed values.
    }
  }
  return workers;
}

}  // namespace nakayama
