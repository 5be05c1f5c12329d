#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace tenspec {

// Exact field of scalars. mpq_class keeps values reduced with positive
// denominator, which is exactly the canonical form the serializers assume.
using Rational = mpq_class;
using Complex = std::complex<double>;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "p/q", optional leading '-'. Used by the JSON readers.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }
inline Complex to_complex(const Rational& r) { return Complex(r.get_d(), 0.0); }

inline Rational pow(const Rational& base, unsigned long e) {
  Rational out;
  mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
  return out;
}

// Nearest rational with denominator <= max_den, by continued-fraction
// convergents. Returns nullopt when no convergent lands within tol of x;
// callers re-verify candidates exactly, so a miss is never wrong, only slow.
inline std::optional<Rational> reconstruct_rational(double x, long max_den = 1000000,
                                                    double tol = 1e-6) {
  if (!std::isfinite(x) || std::abs(x) > 1e12) return std::nullopt;
  long long p0 = 0, q0 = 1;  // h_{-2}, k_{-2}
  long long p1 = 1, q1 = 0;  // h_{-1}, k_{-1}
  double y = x;
  for (int it = 0; it < 64; ++it) {
    double fa = std::floor(y);
    if (std::abs(fa) > 9e15) break;
    long long a = static_cast<long long>(fa);
    long long p2 = a * p1 + p0;
    long long q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    if (q1 > 0 && std::abs(static_cast<double>(p1) / static_cast<double>(q1) - x) <=
                      tol * std::max(1.0, std::abs(x)))
      return rat(p1, q1);
    double frac = y - fa;
    if (frac < 1e-15) break;
    y = 1.0 / frac;
  }
  return std::nullopt;
}

// Scalar concept shims shared by the generic polynomial/matrix code. The two
// working domains are exact rationals and complex doubles; both drop terms
// only on exact zero so numeric cancellation noise stays visible.
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const Complex& c) { return c.real() == 0.0 && c.imag() == 0.0; }
inline bool is_zero(double x) { return x == 0.0; }

inline Rational scalar_one(const Rational*) { return Rational(1); }
inline Complex scalar_one(const Complex*) { return Complex(1.0, 0.0); }
inline double scalar_one(const double*) { return 1.0; }

}  // namespace tenspec
