#pragma once

#include <cstdint>
#include <vector>

#include "orbitkit/rational.hpp"

namespace orbitkit {

/// Deterministic PRNG (splitmix64). Self-contained so that identical seeds
/// give identical streams on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi] inclusive.
  long uniform(long lo, long hi) {
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next_u64() % range);
  }

  double uniform_real(double lo, double hi) {
    double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }

  /// Small random rational; numerators in [-max_num, max_num], denominators
  /// in [1, max_den]. Zero is a regular outcome.
  Rat rational(long max_num = 6, long max_den = 3) {
    return rat(uniform(-max_num, max_num), uniform(1, max_den));
  }

  std::vector<Rat> rational_vector(std::size_t dim, long max_num = 6,
                                   long max_den = 3) {
    std::vector<Rat> v(dim);
    for (auto& x : v) x = rational(max_num, max_den);
    return v;
  }

  /// Child generator with an independent stream, for per-task seeding.
  Rng fork() { return Rng(next_u64() ^ 0xd1b54a32d192ed03ULL); }

 private:
  std::uint64_t state_;
};

}  // namespace orbitkit
