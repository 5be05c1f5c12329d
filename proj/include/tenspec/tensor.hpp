#pragma once

#include <stdexcept>
#include <vector>

#include "tenspec/poly.hpp"

namespace tenspec {

// D(n,d): number of eigenvalues counted with multiplicity, equivalently the
// degree of the characteristic polynomial.
inline int eigencount(int n, int d) {
  if (n < 1 || d < 3) throw std::invalid_argument("eigencount: need n >= 1, d >= 3");
  int p = 1;
  for (int k = 0; k < n; ++k) p *= (d - 1);
  return (n + 1) * p;
}

// Symmetric form: one homogeneous degree-d polynomial in n+1 variables.
template <class C>
struct SymForm {
  int n = 0, d = 0;
  MPoly<C> form;

  SymForm(int n_, int d_, MPoly<C> f) : n(n_), d(d_), form(std::move(f)) {
    if (form.nvars() != n + 1) throw std::invalid_argument("SymForm: arity mismatch");
    if (!form.is_zero_poly() && (!form.is_homogeneous() || form.degree() != d))
      throw std::invalid_argument("SymForm: not homogeneous of the stated degree");
  }
};

// Partially symmetric tensor: n+1 component forms of degree d-1 in n+1
// variables (component i is the coefficient of the i-th output direction).
template <class C>
struct PSTensor {
  int n = 0, d = 0;
  std::vector<MPoly<C>> components;

  PSTensor(int n_, int d_, std::vector<MPoly<C>> comps) : n(n_), d(d_), components(std::move(comps)) {
    if (static_cast<int>(components.size()) != n + 1)
      throw std::invalid_argument("PSTensor: need n+1 components");
    for (const auto& f : components) {
      if (f.nvars() != n + 1) throw std::invalid_argument("PSTensor: component arity mismatch");
      if (!f.is_zero_poly() && (!f.is_homogeneous() || f.degree() != d - 1))
        throw std::invalid_argument("PSTensor: component degree mismatch");
    }
  }

  PSTensor operator+(const PSTensor& o) const {
    require_same_shape(o);
    std::vector<MPoly<C>> comps;
    for (int i = 0; i <= n; ++i) comps.push_back(components[i] + o.components[i]);
    return PSTensor(n, d, std::move(comps));
  }
  PSTensor operator-(const PSTensor& o) const {
    require_same_shape(o);
    std::vector<MPoly<C>> comps;
    for (int i = 0; i <= n; ++i) comps.push_back(components[i] - o.components[i]);
    return PSTensor(n, d, std::move(comps));
  }
  PSTensor operator*(const C& s) const {
    std::vector<MPoly<C>> comps;
    for (int i = 0; i <= n; ++i) comps.push_back(components[i] * s);
    return PSTensor(n, d, std::move(comps));
  }
  bool operator==(const PSTensor& o) const {
    return n == o.n && d == o.d && components == o.components;
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& f : components) m = std::max(m, f.max_abs_coeff());
    return m;
  }

 private:
  void require_same_shape(const PSTensor& o) const {
    if (n != o.n || d != o.d) throw std::invalid_argument("PSTensor: shape mismatch");
  }
};

// Fully general order-d tensor in dense row-major layout ((n+1)^d entries,
// first index slowest). Only used to exercise the projection lemma; sizes are
// capped accordingly.
template <class C>
struct DenseTensor {
  int n = 0, d = 0;
  std::vector<C> entries;

  DenseTensor(int n_, int d_, std::vector<C> e) : n(n_), d(d_), entries(std::move(e)) {
    if (n < 1 || n > 3 || d < 2 || d > 4) throw std::invalid_argument("DenseTensor: supported range is n <= 3, d <= 4");
    std::size_t want = 1;
    for (int k = 0; k < d; ++k) want *= static_cast<std::size_t>(n + 1);
    if (entries.size() != want) throw std::invalid_argument("DenseTensor: entry count mismatch");
  }
};

using SymFormQ = SymForm<Rational>;
using PSTensorQ = PSTensor<Rational>;
using DenseTensorQ = DenseTensor<Rational>;

template <class C>
PSTensor<Complex> to_complex_tensor(const PSTensor<C>& T) {
  std::vector<MPolyC> comps;
  for (const auto& f : T.components) comps.push_back(to_complex_poly(f));
  return PSTensor<Complex>(T.n, T.d, std::move(comps));
}

// u = Σ v_i ⊗ x_i^{d-1}; the distinguished base point of the spectral theory.
inline PSTensorQ unit_tensor(int n, int d) {
  if (n < 1 || d < 2) throw std::invalid_argument("unit_tensor: need n >= 1, d >= 2");
  std::vector<MPolyQ> comps;
  for (int i = 0; i <= n; ++i) {
    Exponents e(n + 1, 0);
    e[i] = d - 1;
    comps.push_back(MPolyQ::monomial(n + 1, e, Rational(1)));
  }
  return PSTensorQ(n, d, std::move(comps));
}

// Gradient embedding: component i is (1/d)·∂f/∂x_i, so Σ x_i^d maps to the
// unit tensor.
template <class C>
PSTensor<C> symmetric_to_ps(const SymForm<C>& f) {
  std::vector<MPoly<C>> comps;
  C inv_d = C(1) / C(f.d);
  for (int i = 0; i <= f.n; ++i) comps.push_back(f.form.partial_derivative(i) * inv_d);
  return PSTensor<C>(f.n, f.d, std::move(comps));
}

namespace detail {
inline void unflatten(std::size_t flat, int n, int d, std::vector<int>& idx) {
  idx.assign(d, 0);
  for (int k = d - 1; k >= 0; --k) {
    idx[k] = static_cast<int>(flat % (n + 1));
    flat /= (n + 1);
  }
}
}  // namespace detail

// π_S: symmetrize the trailing d-1 slots. Component i1 collects
// Σ A[i1, i2, ..., id] · x_{i2}⋯x_{id}.
template <class C>
PSTensor<C> project_partially_symmetric(const DenseTensor<C>& A) {
  std::vector<MPoly<C>> comps(A.n + 1, MPoly<C>(A.n + 1));
  std::vector<int> idx;
  for (std::size_t flat = 0; flat < A.entries.size(); ++flat) {
    if (is_zero(A.entries[flat])) continue;
    detail::unflatten(flat, A.n, A.d, idx);
    Exponents e(A.n + 1, 0);
    for (int k = 1; k < A.d; ++k) e[idx[k]] += 1;
    comps[idx[0]].add_term(e, A.entries[flat]);
  }
  return PSTensor<C>(A.n, A.d, std::move(comps));
}

inline Rational multinomial(int total, const Exponents& parts) {
  mpz_class numer;
  mpz_fac_ui(numer.get_mpz_t(), total);
  mpz_class denom = 1;
  mpz_class f;
  for (int p : parts) {
    mpz_fac_ui(f.get_mpz_t(), p);
    denom *= f;
  }
  Rational r(numer, denom);
  r.canonicalize();
  return r;
}

// Symmetric section of π_S: spreads each monomial coefficient evenly over the
// arrangements of its trailing indices, so project(ps_to_dense(T)) == T.
inline DenseTensorQ ps_to_dense(const PSTensorQ& T) {
  std::size_t total = 1;
  for (int k = 0; k < T.d; ++k) total *= static_cast<std::size_t>(T.n + 1);
  std::vector<Rational> entries(total, Rational(0));
  std::vector<int> idx;
  for (std::size_t flat = 0; flat < total; ++flat) {
    detail::unflatten(flat, T.n, T.d, idx);
    Exponents e(T.n + 1, 0);
    for (int k = 1; k < T.d; ++k) e[idx[k]] += 1;
    Rational c = T.components[idx[0]].coeff(e);
    if (is_zero(c)) continue;
    entries[flat] = c / multinomial(T.d - 1, e);
  }
  return DenseTensorQ(T.n, T.d, std::move(entries));
}

// T(w^{⊗(d-1)}): the vector of component evaluations.
template <class C, class S>
std::vector<S> contract(const PSTensor<C>& T, const std::vector<S>& w) {
  std::vector<S> out;
  out.reserve(T.n + 1);
  for (const auto& f : T.components) out.push_back(f.template eval<S>(w));
  return out;
}

// Same contraction straight off the dense array; the independent check that
// eigendata only sees the partially symmetric part.
template <class C, class S>
std::vector<S> dense_contract(const DenseTensor<C>& A, const std::vector<S>& w) {
  if (static_cast<int>(w.size()) != A.n + 1) throw std::invalid_argument("dense_contract: point arity mismatch");
  std::vector<S> out(A.n + 1, S{});
  std::vector<int> idx;
  for (std::size_t flat = 0; flat < A.entries.size(); ++flat) {
    if (is_zero(A.entries[flat])) continue;
    detail::unflatten(flat, A.n, A.d, idx);
    S t = convert_scalar<S>(A.entries[flat]);
    for (int k = 1; k < A.d; ++k) t = t * w[idx[k]];
    out[idx[0]] += t;
  }
  return out;
}

// Coefficient vector of a binary form: c[k] multiplies x0^k · x1^{deg-k}, so
// the dehomogenization f(s, 1) has c as its ascending coefficients.
template <class C>
std::vector<C> binary_coeffs(const MPoly<C>& f, int deg) {
  if (f.nvars() != 2) throw std::invalid_argument("binary_coeffs: need two variables");
  std::vector<C> c(deg + 1, C{});
  for (const auto& [e, v] : f.terms()) {
    if (e[0] + e[1] != deg) throw std::invalid_argument("binary_coeffs: degree mismatch");
    c.at(e[0]) = v;
  }
  return c;
}

template <class C>
MPoly<C> binary_from_coeffs(const std::vector<C>& c) {
  int deg = static_cast<int>(c.size()) - 1;
  MPoly<C> f(2);
  for (int k = 0; k <= deg; ++k) f.add_term({k, deg - k}, c[k]);
  return f;
}

}  // namespace tenspec
