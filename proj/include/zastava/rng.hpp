#pragma once

// Deterministic, platform-independent randomness for property tests and the
// check suite.  std:: distributions are not byte-portable across standard
// library implementations, so the few draws we need are spelled out here.

#include <cstdint>
#include <string>
#include <vector>

#include "zastava/scalar.hpp"

namespace zastava {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// One RNG per (master seed, test id, trial): failures reproduce in isolation.
inline std::uint64_t derive_seed(std::uint64_t master, const std::string& test_id,
                                 std::uint64_t trial) {
  SplitMix64 mix(master ^ fnv1a(test_id));
  std::uint64_t a = mix.next();
  mix.state ^= trial * 0x9e3779b97f4a7c15ULL;
  return a ^ mix.next();
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t u64() { return gen_.next(); }

  // uniform in [0, n), n > 0, via rejection to stay unbiased
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t x;
    do {
      x = gen_.next();
    } while (x >= limit);
    return x % n;
  }

  long integer(long lo, long hi) {  // inclusive
    return lo + long(below(std::uint64_t(hi - lo + 1)));
  }

  bool flip() { return (gen_.next() & 1) != 0; }

  double real01() { return double(gen_.next() >> 11) * 0x1.0p-53; }

  double real(double lo, double hi) { return lo + (hi - lo) * real01(); }

  Complex complex_box(double lo, double hi) { return {real(lo, hi), real(lo, hi)}; }

  Rational rational(long max_num, long max_den) {
    Rational x(integer(-max_num, max_num), integer(1, max_den));
    x.canonicalize();
    return x;
  }

  Rational nonzero_rational(long max_num, long max_den) {
    for (;;) {
      Rational x = rational(max_num, max_den);
      if (sgn(x) != 0) return x;
    }
  }

  // pairwise distinct rationals (rejection; the grid is large enough)
  std::vector<Rational> distinct_rationals(int n, long max_num, long max_den) {
    std::vector<Rational> out;
    while (int(out.size()) < n) {
      Rational x = rational(max_num, max_den);
      bool fresh = true;
      for (const auto& y : out)
        if (x == y) { fresh = false; break; }
      if (fresh) out.push_back(x);
    }
    return out;
  }

 private:
  SplitMix64 gen_;
};

}  // namespace zastava
