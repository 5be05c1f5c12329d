#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "tenspec/rational.hpp"

namespace tenspec {

// Deterministic draws. mt19937_64 output is pinned by the standard; the
// distributions here are hand-rolled because std::uniform_int_distribution is
// not, and reports must be byte-identical for equal seeds.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  // uniform in [lo, hi], inclusive, via rejection
  long int_in(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("int_in: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<long>(gen_());  // full 64-bit range
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return lo + static_cast<long>(v % span);
  }

  // numerator uniform in [-bound, bound], denominator in [1, bound]
  Rational rational(long bound = 100) {
    return rat(int_in(-bound, bound), int_in(1, bound));
  }

  Rational nonzero_rational(long bound = 100) {
    for (;;) {
      Rational r = rational(bound);
      if (!is_zero(r)) return r;
    }
  }

  // uniform in [0,1) with 53 random bits
  double unit_double() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double double_in(double lo, double hi) { return lo + (hi - lo) * unit_double(); }

  // uniform on the unit circle
  Complex unit_complex() {
    double theta = 2.0 * M_PI * unit_double();
    return Complex(std::cos(theta), std::sin(theta));
  }

  Complex complex_in_disk(double radius = 1.0) {
    double r = radius * std::sqrt(unit_double());
    return r * unit_complex();
  }

  // Independent stream for a named sub-task; keeps criteria decoupled.
  Rng fork(std::uint64_t salt) {
    return Rng(gen_() ^ (salt * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace tenspec
