#include "equibound/parallel.hpp"

#include <cstdlib>
#include <string>

namespace equibound {

std::size_t worker_count() {
  if (const char* env = std::getenv("EQUIBOUND_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n >= 1) return static_cast<std::size_t>(n);
    } catch (...) {
    }
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

}  // namespace equibound
