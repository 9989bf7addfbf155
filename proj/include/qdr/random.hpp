#pragma once

#include <cstdint>
#include <random>

#include "qdr/rational.hpp"

namespace qdr {

// Deterministic generator: the engine and the reduction are fixed so that a
// seed reproduces the same samples on every platform (std distributions are
// implementation-defined, so they are avoided).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(gen_() % span);
  }
  bool coin() { return gen_() & 1U; }
  /// Small nonzero-denominator rational p/q, |p| <= num_bound, 1 <= q <= den_bound.
  Rational rational(int num_bound = 4, int den_bound = 3) {
    Rational q(uniform(-num_bound, num_bound), uniform(1, den_bound));
    q.canonicalize();
    return q;
  }
  Rational nonzero_rational(int num_bound = 4, int den_bound = 3) {
    Rational q;
    do q = rational(num_bound, den_bound);
    while (sgn(q) == 0);
    return q;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qdr
