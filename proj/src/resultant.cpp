#include "tenspec/resultant.hpp"

#include <stdexcept>

#include "tenspec/rng.hpp"

namespace tenspec {

Rational resultant_binary(const PSTensorQ& T) { return det_bareiss(sylvester_matrix(T)); }

Complex resultant_binary(const PSTensor<Complex>& T) { return det_gauss(sylvester_matrix(T)); }

namespace {

// Degree-4 monomials in three variables, split into the Macaulay row
// assignment: the first i with x_i^2 dividing the monomial owns the row.
struct MacaulayLayout {
  std::vector<Exponents> monos;          // graded-lex descending, 15 of them
  std::vector<int> owner;                // component index per row
  std::vector<Exponents> multiplier;     // mono / x_owner^2
  std::vector<int> extraneous;           // rows divisible by two distinct squares
};

MacaulayLayout macaulay_layout() {
  MacaulayLayout L;
  L.monos = monomials_of_degree(3, 4);
  for (std::size_t r = 0; r < L.monos.size(); ++r) {
    const Exponents& e = L.monos[r];
    int own = -1;
    for (int i = 0; i < 3; ++i)
      if (e[i] >= 2) {
        own = i;
        break;
      }
    // every degree-4 monomial in 3 variables has some exponent >= 2
    L.owner.push_back(own);
    Exponents mult = e;
    mult[own] -= 2;
    L.multiplier.push_back(mult);
    int squares = 0;
    for (int i = 0; i < 3; ++i)
      if (e[i] >= 2) ++squares;
    if (squares >= 2) L.extraneous.push_back(static_cast<int>(r));
  }
  return L;
}

struct MacaulayDets {
  Rational numerator;
  Rational denominator;
};

MacaulayDets macaulay_dets(const MPolyQ& q0, const MPolyQ& q1, const MPolyQ& q2) {
  static const MacaulayLayout L = macaulay_layout();
  const MPolyQ* q[3] = {&q0, &q1, &q2};
  int size = static_cast<int>(L.monos.size());
  SquareMatrix<Rational> M(size, Rational(0));
  for (int r = 0; r < size; ++r) {
    MPolyQ row = MPolyQ::monomial(3, L.multiplier[r], Rational(1)) * (*q[L.owner[r]]);
    for (const auto& [e, c] : row.terms()) {
      auto it = std::lower_bound(L.monos.begin(), L.monos.end(), e, GradedLexDesc{});
      M[r][static_cast<int>(it - L.monos.begin())] = c;
    }
  }
  int esize = static_cast<int>(L.extraneous.size());
  SquareMatrix<Rational> E(esize, Rational(0));
  for (int i = 0; i < esize; ++i)
    for (int j = 0; j < esize; ++j) E[i][j] = M[L.extraneous[i]][L.extraneous[j]];
  return {det_bareiss(M), det_bareiss(E)};
}

void check_quadric(const MPolyQ& q) {
  if (q.nvars() != 3) throw std::invalid_argument("resultant_ternary_quadrics: need three variables");
  if (!q.is_zero_poly() && (!q.is_homogeneous() || q.degree() != 2))
    throw std::invalid_argument("resultant_ternary_quadrics: inputs must be quadrics");
}

}  // namespace

Rational resultant_ternary_quadrics(const MPolyQ& q0, const MPolyQ& q1, const MPolyQ& q2,
                                    const RunConfig& cfg) {
  check_quadric(q0);
  check_quadric(q1);
  check_quadric(q2);
  // homogeneous of degree 4 in each argument, so a zero form forces zero;
  // the Macaulay quotient itself degenerates to 0/0 there
  if (q0.is_zero_poly() || q1.is_zero_poly() || q2.is_zero_poly()) return Rational(0);
  MacaulayDets d = macaulay_dets(q0, q1, q2);
  if (!is_zero(d.denominator)) return d.numerator / d.denominator;

  // The extraneous minor can vanish for classical reasons unrelated to the
  // resultant itself; a generic coordinate change restores it. The induced
  // scalar is det(g)^8, established by the degree-(4,4,4) multihomogeneity.
  Rng rng(0x5eedULL ^ cfg.seed);
  for (int attempt = 0; attempt < cfg.macaulay_max_retries; ++attempt) {
    std::vector<std::vector<Rational>> g(3, std::vector<Rational>(3));
    for (auto& row : g)
      for (auto& v : row) v = Rational(rng.int_in(-9, 9));
    Rational det_g = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                     g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                     g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
    if (is_zero(det_g)) continue;
    MacaulayDets ds = macaulay_dets(q0.linear_change(g), q1.linear_change(g), q2.linear_change(g));
    if (is_zero(ds.denominator)) continue;
    return ds.numerator / ds.denominator / pow(det_g, 8);
  }
  throw std::domain_error("resultant_ternary_quadrics: degenerate input, extraneous minor vanished after retries");
}

Rational resultant(const PSTensorQ& T, const RunConfig& cfg) {
  if (T.n == 1) return resultant_binary(T);
  if (T.n == 2 && T.d == 3)
    return resultant_ternary_quadrics(T.components[0], T.components[1], T.components[2], cfg);
  throw std::invalid_argument("resultant: supported shapes are n = 1 and (n, d) = (2, 3)");
}

Rational discriminant(const SymFormQ& f, const RunConfig& cfg) {
  return resultant(symmetric_to_ps(f), cfg);
}

std::vector<Rational> char_poly_nodes(int count) {
  std::vector<Rational> nodes;
  nodes.reserve(count);
  for (int k = 0; k < count; ++k) {
    if (k == 0)
      nodes.emplace_back(0);
    else if (k % 2 == 1)
      nodes.push_back(Rational((k + 1) / 2));
    else
      nodes.push_back(Rational(-(k / 2)));
  }
  return nodes;
}

UPolyQ char_poly(const PSTensorQ& T, const PSTensorQ& t, const std::vector<Rational>& nodes,
                 const RunConfig& cfg) {
  if (T.n != t.n || T.d != t.d) throw std::invalid_argument("char_poly: tensor shapes differ");
  int D = eigencount(T.n, T.d);
  if (static_cast<int>(nodes.size()) != D + 1) throw std::invalid_argument("char_poly: need D+1 nodes");
  Rational res_t = resultant(t, cfg);
  if (is_zero(res_t)) throw std::invalid_argument("char_poly: res(t) = 0");

  std::vector<Rational> values;
  values.reserve(nodes.size());
  for (const Rational& lambda : nodes) values.push_back(resultant(T - t * lambda, cfg));

  UPolyQ p = interpolate(nodes, values);
  Rational lead = (D % 2 == 0) ? res_t : -res_t;
  if (p.degree() != D || p.lead() != lead)
    throw std::logic_error("char_poly: interpolated leading coefficient disagrees with res(t)");
  std::vector<Rational> monic(D + 1, Rational(0));
  for (int k = 0; k <= D; ++k) monic[k] = p.coeff(k) / lead;
  monic[D] = Rational(1);
  return UPolyQ(std::move(monic));
}

UPolyQ char_poly(const PSTensorQ& T, const PSTensorQ& t, const RunConfig& cfg) {
  return char_poly(T, t, char_poly_nodes(eigencount(T.n, T.d) + 1), cfg);
}

UPolyQ char_poly(const PSTensorQ& T, const RunConfig& cfg) {
  return char_poly(T, unit_tensor(T.n, T.d), cfg);
}

}  // namespace tenspec
