#ifndef SCENMINE_RNG_HPP_
#define SCENMINE_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>

namespace scenmine {

// Deterministic RNG with hand-rolled distributions, so generated scenes are
// byte-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool bernoulli(double p) { return uniform01() < p; }

  double normal(double mean, double stddev) {
    // Box-Muller; the spare value is discarded to keep the stream position
    // independent of call history.
    double u1 = uniform01();
    while (u1 <= 1e-300) u1 = uniform01();
    const double u2 = uniform01();
    return mean + stddev * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace scenmine

#endif  // SCENMINE_RNG_HPP_
