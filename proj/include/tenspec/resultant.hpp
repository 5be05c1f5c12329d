#pragma once

#include <vector>

#include "tenspec/config.hpp"
#include "tenspec/matrix_det.hpp"
#include "tenspec/tensor.hpp"

namespace tenspec {

// Matrix of (g0, g1) ↦ g0·f0 + g1·f1 on monomial bases, for binary forms
// f0, f1 of equal degree e given as coefficient vectors (index = x0 exponent).
// Rows: monomials of degree 2e-1, graded-lex descending. Columns: pairs
// (multiplier monomial of degree e-1 descending, component index).
template <class K>
SquareMatrix<K> sylvester_pair(const std::vector<K>& f0, const std::vector<K>& f1, const K& zero) {
  if (f0.size() != f1.size() || f0.size() < 2) throw std::invalid_argument("sylvester_pair: bad coefficient vectors");
  int e = static_cast<int>(f0.size()) - 1;
  int size = 2 * e;
  SquareMatrix<K> m(size, zero);
  for (int j = 0; j < e; ++j) {
    for (int i = 0; i < 2; ++i) {
      const std::vector<K>& f = (i == 0) ? f0 : f1;
      for (int r = 0; r < size; ++r) {
        int k = e + j - r;
        if (k >= 0 && k <= e) m[r][2 * j + i] = f[k];
      }
    }
  }
  return m;
}

// The same matrix for a (1,d) tensor: components are the two binary forms of
// degree d-1, and det = res(T).
template <class C>
SquareMatrix<C> sylvester_matrix(const PSTensor<C>& T) {
  if (T.n != 1) throw std::invalid_argument("sylvester_matrix: only n = 1");
  if (T.d < 2) throw std::invalid_argument("sylvester_matrix: need d >= 2");
  std::vector<C> f0 = binary_coeffs(T.components[0], T.d - 1);
  std::vector<C> f1 = binary_coeffs(T.components[1], T.d - 1);
  return sylvester_pair(f0, f1, C{});
}

Rational resultant_binary(const PSTensorQ& T);
Complex resultant_binary(const PSTensor<Complex>& T);

// Macaulay resultant of three ternary quadrics (exact). Degenerate
// denominator minors trigger random invertible substitutions, undone through
// the det^8 covariance; after max_retries the input is reported degenerate.
Rational resultant_ternary_quadrics(const MPolyQ& q0, const MPolyQ& q1, const MPolyQ& q2,
                                    const RunConfig& cfg = RunConfig{});

// Dispatch on the supported shapes: n = 1 (any d >= 2) and (n, d) = (2, 3).
Rational resultant(const PSTensorQ& T, const RunConfig& cfg = RunConfig{});

// disc(f) = res(symmetric_to_ps(f)).
Rational discriminant(const SymFormQ& f, const RunConfig& cfg = RunConfig{});

// Interpolation nodes 0, 1, -1, 2, -2, ...
std::vector<Rational> char_poly_nodes(int count);

// Monic characteristic polynomial of degree D(n,d):
// res(T - λt) / ((-1)^D res(t)), computed by exact evaluation/interpolation.
// Requires res(t) != 0.
UPolyQ char_poly(const PSTensorQ& T, const PSTensorQ& t, const RunConfig& cfg = RunConfig{});
UPolyQ char_poly(const PSTensorQ& T, const RunConfig& cfg = RunConfig{});  // t = unit tensor
UPolyQ char_poly(const PSTensorQ& T, const PSTensorQ& t, const std::vector<Rational>& nodes,
                 const RunConfig& cfg = RunConfig{});

}  // namespace tenspec
