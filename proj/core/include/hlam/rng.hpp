#pragma once

#include <cstdint>
#include <random>

namespace hlam {

// Deterministic RNG used everywhere randomness is needed.  Seeds are
// explicit arguments of the public API, default 0.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

    // uniform integer in [lo, hi]
    long intspan(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(eng_);
    }

    std::uint64_t raw() { return eng_(); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace hlam
