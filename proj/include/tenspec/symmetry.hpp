#pragma once

#include <optional>
#include <vector>

#include "tenspec/poly.hpp"
#include "tenspec/tensor.hpp"

namespace tenspec {

// Exact arithmetic in the cyclotomic field Q(zeta_d) = Q[z] / Phi_d(z), with z
// a primitive d-th root of unity. Remainders mod Phi_d are canonical, so
// equality is plain coefficient comparison; in particular zeta^{d/2} = -1 for
// even d needs no special casing. order() == 0 marks a plain rational, which
// combines with any cyclotomic order.
class Cyc {
 public:
  Cyc() = default;
  explicit Cyc(int v);
  explicit Cyc(const Rational& r);
  static Cyc zeta(int d, long e);  // z^e in Q(zeta_d)

  int order() const { return d_; }
  const UPolyQ& rep() const { return rep_; }
  bool is_rational() const { return rep_.degree() <= 0; }
  Rational rational_value() const;  // throws unless is_rational()
  Complex to_complex() const;

  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator-() const;
  Cyc operator*(const Cyc& o) const;
  Cyc& operator+=(const Cyc& o);
  // division by a rational-valued element only; general inverses are not needed
  Cyc operator/(const Cyc& o) const;
  bool operator==(const Cyc& o) const;
  bool operator!=(const Cyc& o) const { return !(*this == o); }

 private:
  int d_ = 0;
  UPolyQ rep_;

  Cyc(int d, UPolyQ rep);
  void reduce();
  static int join(int a, int b);
};

inline bool is_zero(const Cyc& c) { return c.rep().is_zero_poly(); }

// Phi_d, computed by exact division of z^d - 1 by the lower cyclotomics.
const UPolyQ& cyclotomic_poly(int d);

MPoly<Cyc> to_cyc_poly(const MPolyQ& f);
MPolyC to_complex_poly(const MPoly<Cyc>& f);

// --- the groups preserving characteristic polynomials ----------------------

struct TorusElement {
  std::vector<Rational> a;  // n+1 entries, all nonzero
};

struct GroupElement {
  TorusElement torus;
  std::vector<int> perm;  // bijection of {0..n}
};

// Symmetric isotropy group (Z_d)^{n+1} ⋊ S_{n+1}: variable j picks up the
// root of unity zeta_d^{exponents[j]}.
struct SymGroupElement {
  std::vector<int> exponents;  // in [0, d)
  std::vector<int> perm;
};

// Component i maps to a_i^{d-1} · f_i(a_0^{-1} x_0, ..., a_n^{-1} x_n).
PSTensorQ torus_act(const TorusElement& a, const PSTensorQ& T);

// Component i maps to component sigma(i) with x_j substituted by
// x_{sigma^{-1}(j)}; composes as a right action:
// perm_act(tau, perm_act(sigma, T)) == perm_act(sigma∘tau, T).
PSTensorQ perm_act(const std::vector<int>& sigma, const PSTensorQ& T);

// torus_act(a, perm_act(sigma, T)); the semidirect order fixed once here.
PSTensorQ group_act(const GroupElement& g, const PSTensorQ& T);

// Eigenvector transport matching group_act: (lambda, w) is an eigenpair of T
// exactly when (lambda, apply_group_point(g, w)) is one of group_act(g, T).
std::vector<Complex> apply_group_point(const GroupElement& g, const std::vector<Complex>& w);

// f with x_j substituted by zeta^{exponents[j]} · x_{perm^{-1}(j)}.
SymForm<Cyc> sym_act(const SymGroupElement& g, const SymFormQ& f);

// All images of f under (Z_d)^{n+1} ⋊ S_{n+1} modulo the global scalings
// {alpha·id : alpha^d = 1}, which act trivially on a degree-d form; the
// quotient is enumerated by pinning exponents[0] = 0. Exact dedup, stable
// enumeration order; supported for n <= 2. The size divides d^n (n+1)!.
std::vector<SymForm<Cyc>> sym_orbit(const SymFormQ& f);

}  // namespace tenspec
