#ifndef LIEC_RNG_HPP
#define LIEC_RNG_HPP

#include <cstdint>
#include <random>

namespace liec {

// mt19937_64 is fully specified by the standard, so seeded generation is
// reproducible across platforms. Bounded draws use plain modulo; the slight
// bias is irrelevant for test-corpus generation.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return state_(); }

    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    int range(int lo, int hi) { return lo + below(hi - lo + 1); }

    bool coin() { return (next() & 1u) != 0; }

  private:
    std::mt19937_64 state_;
};

} // namespace liec

#endif
