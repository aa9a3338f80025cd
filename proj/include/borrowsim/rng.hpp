#pragma once

#include <cstdint>
#include <random>

namespace borrowsim {

// Mixes a base seed with up to three path components into an independent
// stream seed (splitmix64 finalizer). Used everywhere sub-streams are
// derived, e.g. (seed, chain) for MCMC chains or (seed, replicate) in the
// OC engine, so results do not depend on scheduling order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a = 0,
                          std::uint64_t b = 0, std::uint64_t c = 0);

// Deterministic RNG: std::mt19937_64 engine (bit-exact across platforms)
// with hand-rolled variate transforms, since the std:: distribution
// adapters are implementation-defined and would break seed reproducibility.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  static Rng stream(std::uint64_t seed, std::uint64_t a = 0,
                    std::uint64_t b = 0, std::uint64_t c = 0) {
    return Rng(derive_seed(seed, a, b, c));
  }

  std::uint64_t next_u64() { return eng_(); }

  // uniform on [0,1) with 53 random bits
  double uniform() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  // standard normal, Box-Muller with cached spare
  double normal();

  // Marsaglia-Tsang for shape >= 1, boost trick below 1
  double gamma(double shape);

  double beta(double a, double b);

  // sum of Bernoulli trials; O(n), fine for trial-sized n
  int binomial(int n, double p);

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace borrowsim
