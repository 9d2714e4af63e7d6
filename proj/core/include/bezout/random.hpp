#pragma once

#include <cstdint>
#include <random>

namespace bezout {

// Deterministic 64-bit generator. std::mt19937_64 output is fixed by the
// standard; bounded draws avoid std::uniform_int_distribution, whose mapping
// differs between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  // Uniform integer in [lo, hi] excluding zero.
  std::int64_t nonzero(std::int64_t lo, std::int64_t hi) {
    for (;;) {
      std::int64_t v = uniform(lo, hi);
      if (v != 0) return v;
    }
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bezout
