#include "tenspec/disc_geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "tenspec/matrix_det.hpp"
#include "tenspec/roots.hpp"
#include "tenspec/sampling.hpp"

namespace tenspec {

namespace {

// f(s, 1); the form is recovered up to x1-powers, so deg p < d exactly
// encodes a root at infinity of multiplicity d - deg p.
UPolyQ dehomogenize(const SymFormQ& f) { return UPolyQ(binary_coeffs(f.form, f.d)); }

bool proportional(const MPolyQ& f, const MPolyQ& g) {
  if (f.is_zero_poly() || g.is_zero_poly()) return true;
  const auto& [e0, c0] = *f.terms().begin();
  Rational lam = g.coeff(e0) / c0;
  if (is_zero(lam)) return false;
  return g == f * lam;
}

void require_binary(const SymFormQ& f, const char* who) {
  if (f.n != 1) throw std::invalid_argument(std::string(who) + ": binary forms only");
  if (f.form.is_zero_poly()) throw std::invalid_argument(std::string(who) + ": zero form");
}

// Shapes the exact discriminant covers: binary forms and ternary cubics.
void require_disc_shape(const SymFormQ& f, const char* who) {
  if (f.n != 1 && !(f.n == 2 && f.d == 3))
    throw std::invalid_argument(std::string(who) + ": unsupported shape");
  if (f.form.is_zero_poly()) throw std::invalid_argument(std::string(who) + ": zero form");
}

}  // namespace

RootFactorization factor_binary(const SymFormQ& f, const RunConfig& cfg) {
  require_binary(f, "factor_binary");
  const int d = f.d;
  UPolyQ p = dehomogenize(f);
  const int e_inf = d - p.degree();

  RootFactorization out;
  out.exact = true;
  if (p.degree() > 0) {
    for (const auto& part : square_free_decomposition(p)) {
      UPolyQ rem = part.factor;
      for (const auto& cl : univariate_roots(to_complex_poly(rem), cfg)) {
        if (std::abs(cl.value.imag()) >
            cfg.root_cluster_radius * (1.0 + std::abs(cl.value.real())))
          continue;
        auto cand = reconstruct_rational(cl.value.real());
        if (!cand || !is_zero(rem.eval(*cand))) continue;
        rem = rem.divrem(UPolyQ(std::vector<Rational>{-*cand, Rational(1)})).first;
        BinaryRoot r;
        r.value = to_complex(*cand);
        r.exact_value = *cand;
        r.multiplicity = part.multiplicity;
        out.roots.push_back(r);
      }
      if (rem.degree() > 0) {
        out.exact = false;
        for (const auto& cl : univariate_roots(to_complex_poly(rem), cfg)) {
          BinaryRoot r;
          r.value = cl.value;
          r.multiplicity = part.multiplicity * cl.multiplicity;
          out.roots.push_back(r);
        }
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const BinaryRoot& a, const BinaryRoot& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  if (e_inf > 0) {
    BinaryRoot r;
    r.at_infinity = true;
    r.multiplicity = e_inf;
    out.roots.push_back(r);
  }
  int total = 0;
  for (const auto& r : out.roots) total += r.multiplicity;
  if (total != d) throw std::logic_error("factor_binary: multiplicities do not sum to the degree");
  return out;
}

int mult_disc_binary(const SymFormQ& f) {
  require_binary(f, "mult_disc_binary");
  UPolyQ p = dehomogenize(f);
  int distinct = (p.degree() < f.d) ? 1 : 0;  // root at infinity, any multiplicity
  if (p.degree() > 0) distinct += p.degree() - gcd(p, p.derivative()).degree();
  return f.d - distinct;
}

bool tangent_cone_contains(const SymFormQ& f, const SymFormQ& g) {
  require_binary(f, "tangent_cone_contains");
  if (g.n != 1) throw std::invalid_argument("tangent_cone_contains: binary forms only");
  if (g.d != f.d) throw std::invalid_argument("tangent_cone_contains: degree mismatch");
  const int d = f.d;
  UPolyQ p = dehomogenize(f);
  const int e_inf = d - p.degree();

  // squarefree product of the finite factors with e_j >= 2
  UPolyQ rep = UPolyQ::constant(Rational(1));
  if (p.degree() > 0) {
    UPolyQ G = gcd(p, p.derivative());
    if (G.degree() > 0) rep = G.divrem(gcd(G, G.derivative())).first;
  }
  if (rep.degree() == 0 && e_inf < 2)
    throw std::invalid_argument("tangent_cone_contains: f has no repeated root");

  // g lies in the cone iff it vanishes at some repeated root of f
  UPolyQ q = dehomogenize(g);
  bool finite_hit = rep.degree() > 0 && gcd(rep, q).degree() > 0;
  bool infinity_hit = e_inf >= 2 && is_zero(g.form.coeff({d, 0}));
  return finite_hit || infinity_hit;
}

std::optional<int> line_order(const SymFormQ& f, const SymFormQ& g, const RunConfig& cfg) {
  require_disc_shape(f, "line_order");
  require_disc_shape(g, "line_order");
  if (g.n != f.n || g.d != f.d) throw std::invalid_argument("line_order: shape mismatch");
  if (proportional(f.form, g.form)) throw std::invalid_argument("line_order: proportional forms");

  const int D = eigencount(f.n, f.d);  // degree bound for disc(f + t g) in t
  std::vector<Rational> nodes = char_poly_nodes(D + 1);
  std::vector<Rational> values;
  values.reserve(nodes.size());
  for (const Rational& tk : nodes)
    values.push_back(discriminant(SymFormQ(f.n, f.d, f.form + g.form * tk), cfg));
  return vanishing_order(interpolate(nodes, values));
}

std::vector<std::vector<int>> partitions_with_repeat(int d) {
  if (d < 2) throw std::invalid_argument("partitions_with_repeat: need d >= 2");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      if (cur.front() >= 2) out.push_back(cur);
      return;
    }
    for (int part = std::min(rem, maxpart); part >= 1; --part) {
      cur.push_back(part);
      self(self, rem - part, part);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

BuiltBinary random_singular_binary(int d, const std::vector<int>& partition, Rng& rng) {
  int sum = 0;
  for (int e : partition) {
    if (e < 1) throw std::invalid_argument("random_singular_binary: parts must be positive");
    sum += e;
  }
  if (sum != d) throw std::invalid_argument("random_singular_binary: partition must sum to d");

  std::vector<Rational> rs;
  while (rs.size() < partition.size()) {
    Rational r = rng.rational(9);
    bool fresh = true;
    for (const Rational& s : rs)
      if (s == r) fresh = false;
    if (fresh) rs.push_back(r);
  }

  MPolyQ f = MPolyQ::constant(2, Rational(1));
  std::vector<std::pair<Rational, int>> roots;
  for (std::size_t j = 0; j < partition.size(); ++j) {
    MPolyQ ell(2);
    ell.add_term({1, 0}, Rational(1));
    ell.add_term({0, 1}, -rs[j]);
    for (int k = 0; k < partition[j]; ++k) f = f * ell;
    roots.emplace_back(rs[j], partition[j]);
  }
  return BuiltBinary{SymFormQ(1, d, f), std::move(roots)};
}

HurwitzReport hurwitz_sample(int n, int d, int trials, Rng& rng, const RunConfig& cfg) {
  if (n != 1)
    throw std::invalid_argument("hurwitz_sample: n = 1 only; plane cubics have their own sampler");
  if (d < 3) throw std::invalid_argument("hurwitz_sample: need d >= 3");
  if (trials < 1) throw std::invalid_argument("hurwitz_sample: need at least one trial");

  const auto parts = partitions_with_repeat(d);
  HurwitzReport rep;
  rep.n = n;
  rep.d = d;
  rep.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    BuiltBinary built = random_singular_binary(d, parts[trial % parts.size()], rng);
    // even trials: unconstrained direction; odd trials: direction inside the
    // tangent cone, i.e. a multiple of a linear form through a repeated root
    MPolyQ gform(2);
    for (;;) {
      if (trial % 2 == 0) {
        gform = random_form_nonzero(rng, 2, d);
      } else {
        std::vector<std::size_t> repeated;
        for (std::size_t j = 0; j < built.roots.size(); ++j)
          if (built.roots[j].second >= 2) repeated.push_back(j);
        Rational r = built.roots[repeated[rng.int_in(0, static_cast<long>(repeated.size()) - 1)]].first;
        MPolyQ ell(2);
        ell.add_term({1, 0}, Rational(1));
        ell.add_term({0, 1}, -r);
        gform = ell * random_form_nonzero(rng, 2, d - 1);
      }
      if (!proportional(built.f.form, gform)) break;
    }
    auto ord = line_order(built.f, SymFormQ(1, d, gform), cfg);
    if (!ord) {
      rep.contained_count += 1;
      continue;
    }
    rep.histogram[*ord] += 1;
    rep.max_order = std::max(rep.max_order, *ord);
  }
  return rep;
}

namespace {

// disc of the cubic F0 x0^3 + F1 x0^2 x1 + F2 x0 x1^2 + F3 x1^3 with
// polynomial coefficients, through the same Sylvester pipeline as the
// rational path: components (1/3) dF/dx_i, det by cofactor expansion.
MPolyQ symbolic_disc_cubic(const std::array<MPolyQ, 4>& F) {
  const Rational third = rat(1, 3), two_thirds = rat(2, 3);
  std::vector<MPolyQ> f0 = {F[2] * third, F[1] * two_thirds, F[0]};
  std::vector<MPolyQ> f1 = {F[3], F[2] * two_thirds, F[1] * third};
  return det_cofactor(sylvester_pair<MPolyQ>(f0, f1, MPolyQ::zero(4)));
}

// coefficient of t^k, with the t variable dropped back to exponent 0
MPolyQ t_coeff(const MPolyQ& p, int k) {
  MPolyQ out(4);
  for (const auto& [e, c] : p.terms()) {
    if (e[3] != k) continue;
    Exponents e2 = e;
    e2[3] = 0;
    out.add_term(e2, c);
  }
  return out;
}

MPolyQ drop_a2(const MPolyQ& p) {
  MPolyQ out(4);
  for (const auto& [e, c] : p.terms())
    if (e[2] == 0) out.add_term(e, c);
  return out;
}

}  // namespace

BincubicReport bincubic_identities() {
  // ring Q[a0, a1, a2, t]; g = a0 x0^3 + 3 a1 x0^2 x1 + 3 a2 x0 x1^2
  auto var = [](int i) { return MPolyQ::variable(4, i, Rational(1)); };
  const MPolyQ a0 = var(0), a1 = var(1), a2 = var(2), t = var(3);
  const MPolyQ one = MPolyQ::constant(4, Rational(1));
  const MPolyQ zero = MPolyQ::zero(4);
  const Rational three(3);

  const MPolyQ DG = symbolic_disc_cubic({a0, a1 * three, a2 * three, zero});
  const MPolyQ P1 = symbolic_disc_cubic({one + a0 * t, a1 * t * three, a2 * t * three, zero});
  const MPolyQ P2 = symbolic_disc_cubic({a0 * t, one + a1 * t * three, a2 * t * three, zero});

  auto single_term = [](const MPolyQ& c, const Exponents& e) {
    return c.term_count() == 1 && !is_zero(c.coeff(e));
  };

  BincubicReport rep;

  // disc(x0^3 + t g) = t^3 (disc(g) t - 4 a2^3): the t^4 coefficient pins the
  // normalization for free, the t^3 coefficient solves for the scalar.
  {
    BincubicIdentity id;
    id.label = "x0^3";
    const Exponents a2cube = {0, 0, 3, 0};
    if (!t_coeff(P1, 0).is_zero_poly() || !t_coeff(P1, 1).is_zero_poly() ||
        !t_coeff(P1, 2).is_zero_poly())
      id.mismatch = "coefficients of t^0..t^2 do not all vanish";
    else if (t_coeff(P1, 4) != DG)
      id.mismatch = "t^4 coefficient differs from disc(g)";
    else if (!single_term(t_coeff(P1, 3), a2cube))
      id.mismatch = "t^3 coefficient is not a multiple of a2^3";
    else {
      id.scalar = t_coeff(P1, 3).coeff(a2cube) / Rational(-4);
      id.matched = true;
    }
    rep.identities.push_back(id);
  }

  // disc(x0^2 x1 + t g) = t^2 (disc(g) t^2 + 2 a1 a2^2 t + (1/3) a2^2): the
  // scalar must come out the same from the t^3 and t^2 coefficients.
  {
    BincubicIdentity id;
    id.label = "x0^2*x1";
    const Exponents a1a2sq = {0, 1, 2, 0};
    const Exponents a2sq = {0, 0, 2, 0};
    if (!t_coeff(P2, 0).is_zero_poly() || !t_coeff(P2, 1).is_zero_poly())
      id.mismatch = "coefficients of t^0, t^1 do not vanish";
    else if (t_coeff(P2, 4) != DG)
      id.mismatch = "t^4 coefficient differs from disc(g)";
    else if (!single_term(t_coeff(P2, 3), a1a2sq))
      id.mismatch = "t^3 coefficient is not a multiple of a1 a2^2";
    else if (!single_term(t_coeff(P2, 2), a2sq))
      id.mismatch = "t^2 coefficient is not a multiple of a2^2";
    else {
      Rational s3 = t_coeff(P2, 3).coeff(a1a2sq) / Rational(2);
      Rational s2 = t_coeff(P2, 2).coeff(a2sq) * Rational(3);
      if (s3 == s2) {
        id.scalar = s3;
        id.matched = true;
      } else {
        id.mismatch = "t^3 and t^2 coefficients solve to different scalars";
      }
    }
    rep.identities.push_back(id);
  }

  // a2 = 0 means g = x0^2 (a0 x0 + 3 a1 x1), which is singular, so every
  // discriminant above must specialize to the zero polynomial.
  rep.specialization_ok =
      drop_a2(DG).is_zero_poly() && drop_a2(P1).is_zero_poly() && drop_a2(P2).is_zero_poly();
  return rep;
}

}  // namespace tenspec
