#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "tenspec/poly.hpp"
#include "tenspec/rational.hpp"

namespace tenspec {

template <class K>
struct SquareMatrix {
  explicit SquareMatrix(int n_, const K& fill = K{}) : n(n_), a(n_, std::vector<K>(n_, fill)) {
    if (n_ <= 0) throw std::invalid_argument("SquareMatrix: size must be positive");
  }
  int n;
  std::vector<std::vector<K>> a;

  std::vector<K>& operator[](int i) { return a[i]; }
  const std::vector<K>& operator[](int i) const { return a[i]; }
};

inline bool is_zero_entry(const Rational& v) { return is_zero(v); }
inline bool is_zero_entry(const Complex& v) { return is_zero(v); }
template <class C>
bool is_zero_entry(const MPoly<C>& v) {
  return v.is_zero_poly();
}
template <class C>
bool is_zero_entry(const UPoly<C>& v) {
  return v.is_zero_poly();
}

// Laplace expansion along the first row. Exponential; reserved for the small
// symbolic matrices (elimination Sylvester blocks, binary discriminants).
template <class K>
K det_cofactor(const SquareMatrix<K>& m) {
  if (m.n == 1) return m[0][0];
  if (m.n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  K acc = m[0][0] - m[0][0];  // zero of the entry ring, with its shape
  for (int j = 0; j < m.n; ++j) {
    if (is_zero_entry(m[0][j])) continue;
    SquareMatrix<K> minor(m.n - 1, acc);
    for (int r = 1; r < m.n; ++r) {
      int cc = 0;
      for (int c = 0; c < m.n; ++c) {
        if (c == j) continue;
        minor[r - 1][cc++] = m[r][c];
      }
    }
    K term = m[0][j] * det_cofactor(minor);
    if (j % 2 == 1) term = -term;
    acc = acc + term;
  }
  return acc;
}

// Division-free determinant (Samuelson-Berkowitz). Works over any commutative
// ring, which the group-ring scalars used for root-of-unity twists require.
template <class K>
K det_berkowitz(const SquareMatrix<K>& m, const K& one) {
  int n = m.n;
  const K zero = one - one;
  std::vector<K> C{one, -m[0][0]};
  for (int i = 1; i < n; ++i) {
    std::vector<K> t(i + 2, zero);
    t[0] = one;
    t[1] = -m[i][i];
    std::vector<K> v(i, zero);
    for (int r = 0; r < i; ++r) v[r] = m[r][i];
    for (int j = 2; j <= i + 1; ++j) {
      K dot = zero;
      for (int r = 0; r < i; ++r) dot = dot + m[i][r] * v[r];
      t[j] = -dot;
      if (j <= i) {
        std::vector<K> nv(i, zero);
        for (int r = 0; r < i; ++r)
          for (int c = 0; c < i; ++c) nv[r] = nv[r] + m[r][c] * v[c];
        v = std::move(nv);
      }
    }
    std::vector<K> nc(i + 2, zero);
    for (int q = 0; q <= i + 1; ++q) {
      int jlo = std::max(0, q - static_cast<int>(C.size()) + 1);
      for (int j = jlo; j <= q; ++j) nc[q] = nc[q] + t[j] * C[q - j];
    }
    C = std::move(nc);
  }
  K det = C[n];
  if (n % 2 == 1) det = -det;
  return det;
}

// Fraction-free Bareiss over the integers after clearing row denominators.
inline Rational det_bareiss(const SquareMatrix<Rational>& m) {
  int n = m.n;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;  // product of the row-clearing multipliers
  for (int i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m[i][j].get_den().get_mpz_t());
    for (int j = 0; j < n; ++j) {
      mpz_class q = l / m[i][j].get_den();
      a[i][j] = m[i][j].get_num() * q;
    }
    scale *= l;
  }
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return Rational(0);
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  mpz_class det_z = a[n - 1][n - 1];
  if (sign < 0) det_z = -det_z;
  Rational out(det_z, scale);
  out.canonicalize();
  return out;
}

// Gaussian elimination with partial pivoting; the floating counterpart of
// det_bareiss for complex matrices small enough not to warrant Eigen.
inline Complex det_gauss(SquareMatrix<Complex> m) {
  int n = m.n;
  Complex det(1.0, 0.0);
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    double best = std::abs(m[k][k]);
    for (int r = k + 1; r < n; ++r) {
      double v = std::abs(m[r][k]);
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) return Complex(0.0, 0.0);
    if (pivot != k) {
      std::swap(m.a[k], m.a[pivot]);
      det = -det;
    }
    det *= m[k][k];
    for (int r = k + 1; r < n; ++r) {
      Complex f = m[r][k] / m[k][k];
      for (int c = k; c < n; ++c) m[r][c] -= f * m[k][c];
    }
  }
  return det;
}

}  // namespace tenspec
