#include "wframe/parallel.hpp"

#include <cstdlib>
#include <string>

namespace wframe {

int worker_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("WFRAME_THREADS")) {
      try {
        const int v = std::stoi(env);
        if (v >= 1) return v;
      } catch (...) {
      }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
  }();
  return cap;
}

}  // namespace wframe
