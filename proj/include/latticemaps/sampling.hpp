#ifndef LATTICEMAPS_SAMPLING_HPP
#define LATTICEMAPS_SAMPLING_HPP

//---------------------------------------------------------------------------
// sampling.hpp — deterministic random rational sampling.
//
// Verifiers draw generic points with numerators in [-50, 50] and
// denominators in [1, 20]; configurations that hit a degenerate position are
// discarded and redrawn a bounded number of times, after which the error
// "no-valid-samples" is raised. The generator is seeded explicitly so every
// report is reproducible byte for byte.
//---------------------------------------------------------------------------

#include <cstdint>
#include <random>
#include <stdexcept>

#include "latticemaps/rational.hpp"

namespace latticemaps {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long int_in(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(eng_);
  }

  // Generic rational: |num| <= 50, den in [1, 20]; zero allowed.
  Rat rat() { return Rat(int_in(-50, 50), int_in(1, 20)); }

  Rat nonzero_rat() {
    for (int tries = 0; tries < 64; ++tries) {
      Rat r = rat();
      if (!r.is_zero()) return r;
    }
    throw std::runtime_error("no-valid-samples");
  }

  std::uint64_t raw() { return eng_(); }

private:
  std::mt19937_64 eng_;
};

// Retries `draw` until `admissible` accepts its output. Every rejection
// redraws; a bounded retry count turns systematic degeneracy into the
// "no-valid-samples" error instead of an endless loop.
template <class Draw, class Admissible>
auto draw_admissible(Draw&& draw, Admissible&& admissible, int tries = 64) {
  for (int k = 0; k < tries; ++k) {
    auto candidate = draw();
    if (admissible(candidate)) return candidate;
  }
  throw std::runtime_error("no-valid-samples");
}

}  // namespace latticemaps

#endif  // LATTICEMAPS_SAMPLING_HPP
