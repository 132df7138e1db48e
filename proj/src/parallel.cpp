#include "ftspare/parallel.hpp"

#include <cstdlib>

namespace ftspare {

unsigned resolve_threads(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  if (const char *env = std::getenv("FTSPARE_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

} // namespace ftspare
