#include "rml/parallel.hpp"

#include <cstdlib>
#include <string>

namespace rml {

unsigned worker_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* cap = std::getenv("RML_THREADS")) {
    try {
      const long v = std::stol(cap);
      if (v >= 1 && static_cast<unsigned long>(v) < n) n = static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // unparsable cap: ignore
    }
  }
  return n;
}

}  // namespace rml
