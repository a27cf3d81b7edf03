#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace bernsvm {

// Seedable random source for the simulation generators and fold assignment.
// All distributions are built on top of the raw mt19937_64 stream because the
// standard library distribution objects are implementation-defined; with the
// mappings below the draw sequence is identical for a given seed everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on the open interval (0, 1), 53-bit resolution, never 0 or 1.
  double uniform() {
    const std::uint64_t r = gen_() >> 11;
    return (static_cast<double>(r) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via the inverse CDF (Wichura's PPND16 rational
  // approximation, accurate to ~1e-16).
  double normal() { return normal_quantile(uniform()); }

  bool bernoulli(double p) { return uniform() < p; }

  // Draw below n. Modulo bias is < 2^-50 for the n used here.
  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(gen_() % static_cast<std::uint64_t>(n));
  }

  // Fisher-Yates, top-down.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

  static double normal_quantile(double p);

 private:
  std::mt19937_64 gen_;
};

}  // namespace bernsvm
