#include "gralg/parallel.hpp"

#include <cstdlib>
#include <string>

namespace gralg {

unsigned worker_count() {
  if (const char* env = std::getenv("GRALG_WORKERS"); env != nullptr && *env != '\0') {
    try {
      const unsigned long n = std::stoul(env);
      if (n > 0) return static_cast<unsigned>(std::min<unsigned long>(n, 256));
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace gralg
