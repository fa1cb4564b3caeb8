#include "cartanstab/threads.hpp"

#include <cstdlib>
#include <thread>

namespace cartanstab {

int thread_budget() {
  long requested = 0;
  if (const char* env = std::getenv("CARTANSTAB_THREADS")) {
    char* end = nullptr;
    requested = std::strtol(env, &end, 10);
    if (end == env || requested < 0) requested = 0;
  }
  if (requested == 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    requested = hw == 0 ? 1 : static_cast<long>(hw);
  }
  return static_cast<int>(requested < 1 ? 1 : requested);
}

}  // namespace cartanstab
