#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tenspec/rational.hpp"

namespace tenspec {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

// Graded-lex with x0 > x1 > ...; map iteration then matches the canonical
// serialization order (highest degree first, lexicographically descending).
struct GradedLexDesc {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

// All exponent tuples of the given total degree, in canonical order.
inline std::vector<Exponents> monomials_of_degree(int nvars, int deg) {
  if (nvars <= 0 || deg < 0) throw std::invalid_argument("monomials_of_degree: bad arguments");
  std::vector<Exponents> out;
  Exponents cur(nvars, 0);
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (var == nvars - 1) {
      cur[var] = rem;
      out.push_back(cur);
      return;
    }
    for (int e = rem; e >= 0; --e) {
      cur[var] = e;
      self(self, var + 1, rem - e);
    }
  };
  rec(rec, 0, deg);
  return out;
}

template <class To, class From>
To convert_scalar(const From& v) {
  if constexpr (std::is_same_v<To, From>) {
    return v;
  } else if constexpr (std::is_same_v<To, Complex> && std::is_same_v<From, Rational>) {
    return to_complex(v);
  } else if constexpr (std::is_same_v<To, double> && std::is_same_v<From, Rational>) {
    return to_double(v);
  } else {
    static_assert(std::is_same_v<To, From>, "unsupported scalar conversion");
  }
}

// Sparse multivariate polynomial over an exact or floating scalar ring.
template <class C>
class MPoly {
 public:
  using Terms = std::map<Exponents, C, GradedLexDesc>;

  MPoly() : nvars_(0) {}
  explicit MPoly(int nvars) : nvars_(nvars) {
    if (nvars <= 0) throw std::invalid_argument("MPoly: nvars must be positive");
  }

  static MPoly zero(int nvars) { return MPoly(nvars); }

  static MPoly constant(int nvars, const C& c) {
    MPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  static MPoly monomial(int nvars, const Exponents& e, const C& c) {
    MPoly p(nvars);
    p.add_term(e, c);
    return p;
  }

  static MPoly variable(int nvars, int i, const C& c) {
    Exponents e(nvars, 0);
    e.at(i) = 1;
    return monomial(nvars, e, c);
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero_poly() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  int degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first);  // map is graded-desc
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = degree();
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != d) return false;
    return true;
  }

  void add_term(const Exponents& e, const C& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("MPoly: exponent arity mismatch");
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  C coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    if (it == terms_.end()) return C{};
    return it->second;
  }

  MPoly operator+(const MPoly& o) const {
    check_arity(o);
    MPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
  }

  MPoly operator-() const {
    MPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  MPoly operator-(const MPoly& o) const { return *this + (-o); }

  MPoly operator*(const MPoly& o) const {
    check_arity(o);
    MPoly out(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : o.terms_) {
        for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  MPoly operator*(const C& s) const {
    MPoly out(nvars_);
    if (is_zero(s)) return out;
    for (const auto& [e, c] : terms_) {
      C v = c * s;
      if (!is_zero(v)) out.terms_.emplace(e, v);
    }
    return out;
  }

  bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  template <class S>
  S eval(const std::vector<S>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("MPoly::eval: point arity mismatch");
    S acc{};
    for (const auto& [e, c] : terms_) {
      S t = convert_scalar<S>(c);
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) t = t * point[i];
      acc += t;
    }
    return acc;
  }

  MPoly partial_derivative(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("partial_derivative: variable out of range");
    MPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      d[var] -= 1;
      out.add_term(d, c * C(e[var]));
    }
    return out;
  }

  // x_i ↦ a_i · x_i
  MPoly scale_vars(const std::vector<C>& a) const {
    if (static_cast<int>(a.size()) != nvars_) throw std::invalid_argument("scale_vars: arity mismatch");
    MPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      C v = c;
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) v = v * a[i];
      out.add_term(e, v);
    }
    return out;
  }

  // x_i ↦ x_{img[i]}; img must be a permutation of 0..nvars-1
  MPoly permute_vars(const std::vector<int>& img) const {
    if (static_cast<int>(img.size()) != nvars_) throw std::invalid_argument("permute_vars: arity mismatch");
    MPoly out(nvars_);
    Exponents e2(nvars_);
    for (const auto& [e, c] : terms_) {
      std::fill(e2.begin(), e2.end(), 0);
      for (int i = 0; i < nvars_; ++i) e2.at(img[i]) += e[i];
      out.add_term(e2, c);
    }
    return out;
  }

  // x_i ↦ g_i for arbitrary replacement polynomials (all of equal arity)
  MPoly substitute(const std::vector<MPoly>& g) const {
    if (static_cast<int>(g.size()) != nvars_) throw std::invalid_argument("substitute: arity mismatch");
    int out_vars = g.empty() ? nvars_ : g[0].nvars();
    // power cache per variable
    std::vector<std::vector<MPoly>> pw(nvars_);
    for (int i = 0; i < nvars_; ++i) pw[i].push_back(MPoly::constant(out_vars, C(1)));
    MPoly out(out_vars);
    for (const auto& [e, c] : terms_) {
      MPoly t = MPoly::constant(out_vars, c);
      for (int i = 0; i < nvars_; ++i) {
        while (static_cast<int>(pw[i].size()) <= e[i]) pw[i].push_back(pw[i].back() * g[i]);
        if (e[i] > 0) t = t * pw[i][e[i]];
      }
      out = out + t;
    }
    return out;
  }

  // x_i ↦ Σ_j m[i][j] · x_j
  MPoly linear_change(const std::vector<std::vector<C>>& m) const {
    std::vector<MPoly> g;
    g.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      if (static_cast<int>(m.at(i).size()) != nvars_) throw std::invalid_argument("linear_change: shape mismatch");
      MPoly row(nvars_);
      for (int j = 0; j < nvars_; ++j) row.add_term(unit_exp(j), m[i][j]);
      g.push_back(row);
    }
    return substitute(g);
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(convert_scalar<Complex>(c)));
    return m;
  }

 private:
  Exponents unit_exp(int i) const {
    Exponents e(nvars_, 0);
    e[i] = 1;
    return e;
  }
  void check_arity(const MPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MPoly: arity mismatch");
  }

  int nvars_;
  Terms terms_;
};

using MPolyQ = MPoly<Rational>;
using MPolyC = MPoly<Complex>;

template <class C>
MPoly<Complex> to_complex_poly(const MPoly<C>& p) {
  MPoly<Complex> out(p.nvars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, convert_scalar<Complex>(c));
  return out;
}

// --- text format -----------------------------------------------------------
//
// Canonical term form "coeff*x0^a*x1^b" joined by '+'; zero exponents are
// dropped, exponent 1 prints bare, the zero polynomial prints "0".

inline std::string to_string(const MPolyQ& p) {
  if (p.is_zero_poly()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) out += "+";
    first = false;
    out += to_string(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += "*x" + std::to_string(i);
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

MPolyQ parse_mpoly(const std::string& text, int nvars);

// --- univariate ------------------------------------------------------------

// Dense coefficients, ascending: coeffs[k] multiplies λ^k. Trailing zeros are
// trimmed so degree() is honest; the zero polynomial has empty coeffs.
template <class C>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly zero() { return UPoly(); }
  static UPoly constant(const C& c) { return UPoly(std::vector<C>{c}); }

  static UPoly from_roots(const std::vector<C>& roots, const C& lead) {
    UPoly p = constant(lead);
    for (const C& r : roots) p = p * UPoly(std::vector<C>{-r, C(1)});
    return p;
  }

  const std::vector<C>& coeffs() const { return c_; }
  bool is_zero_poly() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  C coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return C{};
    return c_[k];
  }
  C lead() const {
    if (c_.empty()) throw std::invalid_argument("lead of zero polynomial");
    return c_.back();
  }

  UPoly operator+(const UPoly& o) const {
    std::vector<C> out(std::max(c_.size(), o.c_.size()), C{});
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return UPoly(std::move(out));
  }
  UPoly operator-() const {
    std::vector<C> out = c_;
    for (C& v : out) v = -v;
    return UPoly(std::move(out));
  }
  UPoly operator-(const UPoly& o) const { return *this + (-o); }
  UPoly operator*(const UPoly& o) const {
    if (c_.empty() || o.c_.empty()) return UPoly();
    std::vector<C> out(c_.size() + o.c_.size() - 1, C{});
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(out));
  }
  UPoly operator*(const C& s) const {
    std::vector<C> out = c_;
    for (C& v : out) v = v * s;
    return UPoly(std::move(out));
  }
  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  template <class S>
  S eval(const S& x) const {
    S acc{};
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + convert_scalar<S>(c_[i]);
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly();
    std::vector<C> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * C(static_cast<int>(i));
    return UPoly(std::move(out));
  }

  // exact division over a field; throws if divisor is zero
  std::pair<UPoly, UPoly> divrem(const UPoly& d) const {
    if (d.is_zero_poly()) throw std::invalid_argument("division by zero polynomial");
    UPoly r = *this;
    std::vector<C> q(std::max<int>(0, degree() - d.degree() + 1), C{});
    while (!r.is_zero_poly() && r.degree() >= d.degree()) {
      C f = r.lead() / d.lead();
      int sh = r.degree() - d.degree();
      q[sh] = f;
      std::vector<C> rr = r.c_;
      for (int i = 0; i <= d.degree(); ++i) rr[i + sh] -= f * d.c_[i];
      rr.pop_back();  // leading term cancels exactly
      r = UPoly(std::move(rr));
    }
    return {UPoly(std::move(q)), r};
  }

  UPoly monic() const {
    if (is_zero_poly()) return *this;
    return *this * (C(1) / lead());
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<C> c_;
};

using UPolyQ = UPoly<Rational>;
using UPolyC = UPoly<Complex>;

inline UPolyC to_complex_poly(const UPolyQ& p) {
  std::vector<Complex> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.push_back(to_complex(v));
  return UPolyC(std::move(c));
}

// Exact Lagrange interpolation through (nodes[i], values[i]). Nodes must be
// pairwise distinct; sample count fixes the maximal degree.
template <class C>
UPoly<C> interpolate(const std::vector<C>& nodes, const std::vector<C>& values) {
  if (nodes.size() != values.size()) throw std::invalid_argument("interpolate: node/value count mismatch");
  if (nodes.empty()) throw std::invalid_argument("interpolate: no samples");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (is_zero(nodes[i] - nodes[j])) throw std::invalid_argument("interpolate: duplicate nodes");
  // Newton form
  std::size_t n = nodes.size();
  std::vector<C> dd = values;  // divided differences in place
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
  UPoly<C> out = UPoly<C>::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    out = out * UPoly<C>(std::vector<C>{-nodes[i], C(1)}) + UPoly<C>::constant(dd[i]);
  }
  return out;
}

// Order of vanishing at 0; the zero polynomial has no finite order and is
// reported as an empty optional rather than an error.
template <class C>
std::optional<int> vanishing_order(const UPoly<C>& p) {
  if (p.is_zero_poly()) return std::nullopt;
  for (int k = 0;; ++k)
    if (!is_zero(p.coeff(k))) return k;
}

// Monic gcd over an exact field.
inline UPolyQ gcd(UPolyQ a, UPolyQ b) {
  while (!b.is_zero_poly()) {
    UPolyQ r = a.divrem(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero_poly()) return a;
  return a.monic();
}

// Yun square-free decomposition: p = lead · Π factor[i]^mult[i] with the
// factors monic, square-free and pairwise coprime.
struct SquareFreePart {
  UPolyQ factor;
  int multiplicity = 0;
};

inline std::vector<SquareFreePart> square_free_decomposition(const UPolyQ& p) {
  if (p.is_zero_poly()) throw std::invalid_argument("square_free_decomposition of zero polynomial");
  std::vector<SquareFreePart> out;
  UPolyQ f = p.monic();
  if (f.degree() == 0) return out;
  UPolyQ g = gcd(f, f.derivative());
  UPolyQ w = f.divrem(g).first;          // product of distinct factors
  UPolyQ y = f.derivative().divrem(g).first;
  UPolyQ z = y - w.derivative();
  int m = 1;
  while (!(w.degree() == 0)) {
    UPolyQ common = gcd(w, z);
    if (common.degree() > 0) out.push_back({common, m});
    w = w.divrem(common).first;
    y = z.divrem(common).first;
    z = y - w.derivative();
    ++m;
  }
  return out;
}

std::string to_string(const UPolyQ& p);

}  // namespace tenspec
