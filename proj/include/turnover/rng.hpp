#ifndef TURNOVER_RNG_HPP
#define TURNOVER_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace turnover {

// splitmix64 step; used both as a stream splitter and to whiten seeds.
std::uint64_t splitmix64(std::uint64_t& state);

// Derives an independent child seed from (root, index); replicate streams in
// the simulation harness are split this way so results do not depend on
// thread count.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);

// mt19937_64 with hand-rolled distributions.  std:: distributions are
// implementation-defined, which would break the bit-reproducibility contract
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  // Uniform on [0,1) with 53-bit resolution.
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller; consumes two uniforms per pair, caches the second.
  double normal();
  double normal(double mean, double sd) { return mean + sd * normal(); }

  // Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

  // Index drawn from unnormalized nonnegative weights by CDF scan.
  std::size_t categorical(const std::vector<double>& weights);

  // In-place Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Weighted sample without replacement of exactly `count` indices from
// weights[0..n), Efraimidis-Spirakis keys.  Returned indices are sorted.
std::vector<std::size_t> weighted_sample_without_replacement(
    Rng& rng, const std::vector<double>& weights, std::size_t count);

}  // namespace turnover

#endif
