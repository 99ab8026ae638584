#ifndef DMM_RNG_HPP
#define DMM_RNG_HPP

#include <cstdint>
#include <random>

namespace dmm {

// Seeded generator with a fully pinned draw sequence. Distribution mapping is
// done by hand because the standard distributions are not bit-reproducible
// across library implementations, and replayable traces depend on that.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // [0, 1)
  double uniform01() { return (eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // [0, n)
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace dmm

#endif
