#include "hsda/random.h"

#include <cassert>

namespace hsda {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  assert(bound > 0);
  // Reject the low 2^64 mod bound values so every residue is equally likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace hsda
