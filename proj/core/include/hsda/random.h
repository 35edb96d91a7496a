#pragma once

#include <cstdint>
#include <random>

namespace hsda {

// Seeded 64-bit generator with a portable bounded draw. std::mt19937_64's
// output sequence is fixed by the standard; the standard distributions are
// not, so bounded draws are done here by rejection.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace hsda
