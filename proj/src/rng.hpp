#pragma once

#include <cstdint>
#include <random>

namespace oti {

// Deterministic per-call random stream. Every randomized routine takes an
// explicit seed and owns its own Rng; nothing global.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed ^ 0x9e3779b97f4a7c15ULL) {}

  uint64_t next() { return eng_(); }

  // Uniform in [0, n), n > 0.
  uint64_t below(uint64_t n) {
    std::uniform_int_distribution<uint64_t> d(0, n - 1);
    return d(eng_);
  }

  int range(int lo, int hi) {  // inclusive
    std::uniform_int_distribution<int> d(lo, hi);
    return d(eng_);
  }

  // Derive an independent substream; used by grid runners so cells are
  // reproducible regardless of execution order.
  Rng fork(uint64_t salt) {
    uint64_t s = eng_() ^ (salt * 0xbf58476d1ce4e5b9ULL + 0x94d049bb133111ebULL);
    return Rng(s);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace oti
