#include "tenspec/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numbers>
#include <stdexcept>

namespace tenspec {

namespace {

void validate_perm(const std::vector<int>& p, int n) {
  if (static_cast<int>(p.size()) != n + 1)
    throw std::invalid_argument("permutation: size mismatch");
  std::vector<bool> seen(n + 1, false);
  for (int v : p) {
    if (v < 0 || v > n || seen[v]) throw std::invalid_argument("permutation: not a bijection");
    seen[v] = true;
  }
}

// exponent remap of the substitution x_j -> x_{sigma^{-1}(j)}
Exponents permute_exponents(const Exponents& alpha, const std::vector<int>& sigma) {
  Exponents beta(alpha.size());
  for (std::size_t m = 0; m < alpha.size(); ++m) beta[m] = alpha[sigma[m]];
  return beta;
}

Rational rational_pow(const Rational& a, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= a;
  return r;
}

}  // namespace

// --- Cyc -------------------------------------------------------------------

const UPolyQ& cyclotomic_poly(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic_poly: d must be positive");
  static std::map<int, UPolyQ> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::vector<Rational> c(d + 1, Rational(0));
  c[0] = Rational(-1);
  c[d] = Rational(1);
  UPolyQ p(std::move(c));  // z^d - 1
  for (int m = 1; m < d; ++m) {
    if (d % m != 0) continue;
    auto [q, r] = p.divrem(cyclotomic_poly(m));
    if (!r.is_zero_poly()) throw std::logic_error("cyclotomic_poly: inexact division");
    p = std::move(q);
  }
  return cache.emplace(d, std::move(p)).first->second;
}

Cyc::Cyc(int v) : rep_(UPolyQ::constant(Rational(v))) {}
Cyc::Cyc(const Rational& r) : rep_(UPolyQ::constant(r)) {}

Cyc::Cyc(int d, UPolyQ rep) : d_(d), rep_(std::move(rep)) { reduce(); }

void Cyc::reduce() {
  if (d_ > 0 && rep_.degree() >= cyclotomic_poly(d_).degree())
    rep_ = rep_.divrem(cyclotomic_poly(d_)).second;
}

int Cyc::join(int a, int b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw std::logic_error("Cyc: mixed cyclotomic orders");
}

Cyc Cyc::zeta(int d, long e) {
  if (d < 1) throw std::invalid_argument("Cyc::zeta: d must be positive");
  long r = e % d;
  if (r < 0) r += d;
  std::vector<Rational> c(r + 1, Rational(0));
  c[r] = Rational(1);
  return Cyc(d, UPolyQ(std::move(c)));
}

Rational Cyc::rational_value() const {
  if (!is_rational()) throw std::logic_error("Cyc: not a rational value");
  return rep_.coeff(0);
}

Complex Cyc::to_complex() const {
  if (d_ == 0) return tenspec::to_complex(rep_.coeff(0));
  const double arg = 2.0 * std::numbers::pi / d_;
  return rep_.eval<Complex>(Complex(std::cos(arg), std::sin(arg)));
}

Cyc Cyc::operator+(const Cyc& o) const { return Cyc(join(d_, o.d_), rep_ + o.rep_); }
Cyc Cyc::operator-(const Cyc& o) const { return Cyc(join(d_, o.d_), rep_ - o.rep_); }
Cyc Cyc::operator-() const { return Cyc(d_, -rep_); }
Cyc Cyc::operator*(const Cyc& o) const { return Cyc(join(d_, o.d_), rep_ * o.rep_); }

Cyc& Cyc::operator+=(const Cyc& o) {
  *this = *this + o;
  return *this;
}

Cyc Cyc::operator/(const Cyc& o) const {
  if (!o.is_rational()) throw std::invalid_argument("Cyc: division only by rational values");
  Rational r = o.rational_value();
  if (is_zero(r)) throw std::invalid_argument("Cyc: division by zero");
  return Cyc(join(d_, o.d_), rep_ * (Rational(1) / r));
}

bool Cyc::operator==(const Cyc& o) const {
  join(d_, o.d_);  // reject comparisons across different fields
  return rep_ == o.rep_;
}

MPoly<Cyc> to_cyc_poly(const MPolyQ& f) {
  MPoly<Cyc> out(f.nvars());
  for (const auto& [e, c] : f.terms()) out.add_term(e, Cyc(c));
  return out;
}

MPolyC to_complex_poly(const MPoly<Cyc>& f) {
  MPolyC out(f.nvars());
  for (const auto& [e, c] : f.terms()) out.add_term(e, c.to_complex());
  return out;
}

// --- group actions ----------------------------------------------------------

PSTensorQ torus_act(const TorusElement& a, const PSTensorQ& T) {
  if (static_cast<int>(a.a.size()) != T.n + 1)
    throw std::invalid_argument("torus_act: size mismatch");
  std::vector<Rational> inv;
  inv.reserve(a.a.size());
  for (const Rational& v : a.a) {
    if (is_zero(v)) throw std::invalid_argument("torus_act: zero torus entry");
    inv.push_back(Rational(1) / v);
  }
  std::vector<MPolyQ> comps;
  comps.reserve(T.n + 1);
  for (int i = 0; i <= T.n; ++i)
    comps.push_back(T.components[i].scale_vars(inv) * rational_pow(a.a[i], T.d - 1));
  return PSTensorQ(T.n, T.d, std::move(comps));
}

PSTensorQ perm_act(const std::vector<int>& sigma, const PSTensorQ& T) {
  validate_perm(sigma, T.n);
  std::vector<MPolyQ> comps;
  comps.reserve(T.n + 1);
  for (int i = 0; i <= T.n; ++i) {
    MPolyQ g(T.n + 1);
    for (const auto& [e, c] : T.components[sigma[i]].terms())
      g.add_term(permute_exponents(e, sigma), c);
    comps.push_back(std::move(g));
  }
  return PSTensorQ(T.n, T.d, std::move(comps));
}

PSTensorQ group_act(const GroupElement& g, const PSTensorQ& T) {
  return torus_act(g.torus, perm_act(g.perm, T));
}

std::vector<Complex> apply_group_point(const GroupElement& g, const std::vector<Complex>& w) {
  validate_perm(g.perm, static_cast<int>(w.size()) - 1);
  if (g.torus.a.size() != w.size()) throw std::invalid_argument("apply_group_point: size mismatch");
  std::vector<Complex> out(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) out[j] = to_complex(g.torus.a[j]) * w[g.perm[j]];
  return out;
}

SymForm<Cyc> sym_act(const SymGroupElement& g, const SymFormQ& f) {
  validate_perm(g.perm, f.n);
  if (static_cast<int>(g.exponents.size()) != f.n + 1)
    throw std::invalid_argument("sym_act: exponent count mismatch");
  MPoly<Cyc> out(f.n + 1);
  for (const auto& [e, c] : f.form.terms()) {
    long twist = 0;
    for (int j = 0; j <= f.n; ++j) twist += static_cast<long>(g.exponents[j]) * e[j];
    out.add_term(permute_exponents(e, g.perm), Cyc(c) * Cyc::zeta(f.d, twist));
  }
  return SymForm<Cyc>(f.n, f.d, std::move(out));
}

std::vector<SymForm<Cyc>> sym_orbit(const SymFormQ& f) {
  if (f.n > 2) throw std::invalid_argument("sym_orbit: supported for n <= 2");
  const int n = f.n, d = f.d;
  std::vector<SymForm<Cyc>> orbit;
  std::vector<int> sigma(n + 1);
  for (int i = 0; i <= n; ++i) sigma[i] = i;
  do {
    // exponents[0] = 0 is a transversal of the global scalings alpha^d = 1
    std::vector<int> k(n + 1, 0);
    for (;;) {
      SymForm<Cyc> img = sym_act(SymGroupElement{k, sigma}, f);
      bool dup = false;
      for (const auto& m : orbit)
        if (m.form == img.form) {
          dup = true;
          break;
        }
      if (!dup) orbit.push_back(std::move(img));
      int pos = n;
      while (pos >= 1 && k[pos] == d - 1) k[pos--] = 0;
      if (pos < 1) break;
      ++k[pos];
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return orbit;
}

}  // namespace tenspec
