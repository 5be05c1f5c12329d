#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "tenspec/matrix_det.hpp"
#include "tenspec/resultant.hpp"
#include "tenspec/sampling.hpp"
#include "tenspec/spectra.hpp"
#include "tenspec/symmetry.hpp"
#include "test_util.hpp"

using namespace tenspec;

namespace {

UPolyQ upoly(std::vector<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UPolyQ(std::move(v));
}

std::vector<int> random_perm(Rng& rng, int n) {
  std::vector<int> p(n + 1);
  for (int i = 0; i <= n; ++i) p[i] = i;
  for (int i = n; i > 0; --i) std::swap(p[i], p[rng.int_in(0, i)]);
  return p;
}

TorusElement random_torus(Rng& rng, int n) {
  TorusElement a;
  for (int i = 0; i <= n; ++i) a.a.push_back(rng.nonzero_rational(7));
  return a;
}

// res(P - lambda U) through the same Sylvester matrix on both scalar rings,
// so member-versus-base comparisons cannot hide in a convention change
template <class K>
K binary_pencil_res(const PSTensor<K>& P, const PSTensor<K>& U, const K& lambda, const K& one) {
  const int e = P.d - 1;
  std::vector<K> f0 = binary_coeffs(P.components[0] - U.components[0] * lambda, e);
  std::vector<K> f1 = binary_coeffs(P.components[1] - U.components[1] * lambda, e);
  return det_berkowitz(sylvester_pair(f0, f1, K{}), one);
}

PSTensor<Cyc> cyc_unit_tensor(int n, int d) {
  PSTensorQ u = unit_tensor(n, d);
  std::vector<MPoly<Cyc>> comps;
  for (const auto& f : u.components) comps.push_back(to_cyc_poly(f));
  return PSTensor<Cyc>(n, d, std::move(comps));
}

}  // namespace

TEST_CASE("cyclotomic polynomials match the classical table") {
  CHECK(cyclotomic_poly(1) == upoly({-1, 1}));
  CHECK(cyclotomic_poly(2) == upoly({1, 1}));
  CHECK(cyclotomic_poly(3) == upoly({1, 1, 1}));
  CHECK(cyclotomic_poly(4) == upoly({1, 0, 1}));
  CHECK(cyclotomic_poly(5) == upoly({1, 1, 1, 1, 1}));
  CHECK(cyclotomic_poly(6) == upoly({1, -1, 1}));
  CHECK(cyclotomic_poly(12) == upoly({1, 0, -1, 0, 1}));
  CHECK_THROWS_AS(cyclotomic_poly(0), std::invalid_argument);
}

TEST_CASE("cyclotomic field arithmetic reduces canonically") {
  Cyc z5 = Cyc::zeta(5, 1);
  Cyc acc = z5;
  for (int k = 0; k < 4; ++k) acc = acc * z5;
  CHECK(acc == Cyc(1));  // zeta^5 = 1
  Cyc sum = Cyc(1);
  for (int k = 1; k < 5; ++k) sum += Cyc::zeta(5, k);
  CHECK(is_zero(sum));  // 1 + zeta + ... + zeta^4 = 0
  CHECK(Cyc::zeta(6, 3) == Cyc(-1));
  CHECK(Cyc::zeta(4, 2) == Cyc(-1));
  CHECK(Cyc::zeta(4, -1) == Cyc::zeta(4, 3));
  CHECK((Cyc::zeta(5, 2) * Cyc(3)) / Cyc(3) == Cyc::zeta(5, 2));

  Complex z = Cyc::zeta(7, 1).to_complex();
  CHECK(std::abs(z - std::polar(1.0, 2.0 * std::acos(-1.0) / 7.0)) < 1e-12);
  CHECK(Cyc(Rational(2, 3)).rational_value() == Rational(2, 3));
  CHECK_THROWS_AS(Cyc::zeta(5, 1).rational_value(), std::logic_error);
  CHECK_THROWS_AS((void)(Cyc::zeta(3, 1) == Cyc::zeta(5, 1)), std::logic_error);
  CHECK_THROWS_AS(Cyc(1) / Cyc::zeta(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(Cyc(1) / Cyc(0), std::invalid_argument);
}

TEST_CASE("torus action scales a basis tensor by its character") {
  // component f0 = x1^2 picks up a0^2 a1^{-2}
  PSTensorQ T(1, 3, {MPolyQ::monomial(2, {0, 2}, Rational(1)), MPolyQ::zero(2)});
  TorusElement a{{Rational(3), Rational(5, 2)}};
  PSTensorQ image = torus_act(a, T);
  Rational want = Rational(9) * Rational(4, 25);
  CHECK(image.components[0] == MPolyQ::monomial(2, {0, 2}, want));
  CHECK(image.components[1].is_zero_poly());

  Rng rng(411);
  PSTensorQ R = random_pstensor(rng, 2, 3, 9);
  TorusElement ones{{Rational(1), Rational(1), Rational(1)}};
  CHECK(torus_act(ones, R) == R);
  CHECK_THROWS_AS(torus_act(TorusElement{{Rational(0), Rational(1), Rational(1)}}, R),
                  std::invalid_argument);
  CHECK_THROWS_AS(torus_act(TorusElement{{Rational(1), Rational(1)}}, R), std::invalid_argument);
}

TEST_CASE("permutation action fixes the unit tensor and composes on the right") {
  PSTensorQ u = unit_tensor(2, 3);
  std::vector<int> sigma{0, 1, 2};
  do {
    CHECK(perm_act(sigma, u) == u);
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  Rng rng(412);
  for (int trial = 0; trial < 4; ++trial) {
    PSTensorQ T = random_pstensor(rng, 2, 3, 9);
    std::vector<int> s = random_perm(rng, 2);
    std::vector<int> t = random_perm(rng, 2);
    std::vector<int> st(3);
    for (int i = 0; i <= 2; ++i) st[i] = s[t[i]];
    CHECK(perm_act(t, perm_act(s, T)) == perm_act(st, T));
    CHECK(perm_act({0, 1, 2}, T) == T);

    TorusElement a = random_torus(rng, 2);
    TorusElement b = random_torus(rng, 2);
    TorusElement ab;
    for (int i = 0; i <= 2; ++i) ab.a.push_back(a.a[i] * b.a[i]);
    CHECK(torus_act(a, torus_act(b, T)) == torus_act(ab, T));
  }
  CHECK_THROWS_AS(perm_act({0, 0, 2}, u), std::invalid_argument);
  CHECK_THROWS_AS(perm_act({0, 1}, u), std::invalid_argument);
}

TEST_CASE("group actions preserve the characteristic polynomial exactly") {
  Rng rng(413);
  RunConfig cfg;
  for (auto [n, d] : {std::pair{1, 3}, {1, 4}}) {
    for (int trial = 0; trial < 3; ++trial) {
      PSTensorQ T = random_pstensor(rng, n, d, 9);
      UPolyQ chi = char_poly(T, cfg);
      CHECK(char_poly(torus_act(random_torus(rng, n), T), cfg) == chi);
      CHECK(char_poly(perm_act(random_perm(rng, n), T), cfg) == chi);
    }
  }
  PSTensorQ T = random_pstensor(rng, 2, 3, 5);
  UPolyQ chi = char_poly(T, cfg);
  std::vector<int> sigma{0, 1, 2};
  do {
    CHECK(char_poly(perm_act(sigma, T), cfg) == chi);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  CHECK(char_poly(torus_act(random_torus(rng, 2), T), cfg) == chi);
}

TEST_CASE("eigenpairs transport along the stabilizer of the unit tensor") {
  Rng rng(414);
  RunConfig cfg;
  for (auto [n, d] : {std::pair{1, 3}, {1, 4}, {2, 3}}) {
    PSTensorQ T = random_pstensor(rng, n, d, 5);
    GroupElement g{random_torus(rng, n), random_perm(rng, n)};
    PSTensorQ gT = group_act(g, T);
    // the unit tensor is H-invariant, so eigenpairs of (T, u) map to (gT, u)
    CHECK(torus_act(g.torus, perm_act(g.perm, unit_tensor(n, d))) == unit_tensor(n, d));
    EigenschemeReport rep = eigenscheme(T, cfg);
    EigenschemeReport grep = eigenscheme(gT, cfg);
    CHECK(grep.pairs.size() == rep.pairs.size());
    double scale = 1.0 + gT.max_abs_coeff();
    for (const auto& pr : rep.pairs) {
      std::vector<Complex> w = normalize_projective(apply_group_point(g, pr.w));
      CHECK(eigenpair_residual(gT, unit_tensor(n, d), pr.lambda, w) <=
            cfg.eigen_residual_tol * scale);
    }
  }
}

TEST_CASE("symmetric orbits of isotropic forms collapse") {
  for (auto [n, d] : {std::pair{1, 3}, {1, 5}, {2, 3}}) {
    MPolyQ f = MPolyQ::zero(n + 1);
    for (int i = 0; i <= n; ++i) {
      Exponents e(n + 1, 0);
      e[i] = d;
      f = f + MPolyQ::monomial(n + 1, e, Rational(1));
    }
    auto orbit = sym_orbit(SymFormQ(n, d, f));
    REQUIRE(orbit.size() == 1);
    CHECK(orbit[0].form == to_cyc_poly(f));
  }
  // x0^d has isotropy of index two: the orbit is {x0^d, x1^d}
  auto axis = sym_orbit(SymFormQ(1, 4, MPolyQ::monomial(2, {4, 0}, Rational(1))));
  REQUIRE(axis.size() == 2);
  CHECK(axis[0].form == to_cyc_poly(MPolyQ::monomial(2, {4, 0}, Rational(1))));
  CHECK(axis[1].form == to_cyc_poly(MPolyQ::monomial(2, {0, 4}, Rational(1))));
  CHECK_THROWS_AS(sym_orbit(SymFormQ(3, 3, MPolyQ::monomial(4, {3, 0, 0, 0}, Rational(1)))),
                  std::invalid_argument);
}

TEST_CASE("sym_act twists coefficients by the recorded root of unity") {
  SymFormQ f(1, 3, MPolyQ::monomial(2, {2, 1}, Rational(1)));
  SymForm<Cyc> a = sym_act(SymGroupElement{{0, 1}, {0, 1}}, f);
  CHECK(a.form == MPoly<Cyc>::monomial(2, {2, 1}, Cyc::zeta(3, 1)));
  SymForm<Cyc> b = sym_act(SymGroupElement{{0, 1}, {1, 0}}, f);
  CHECK(b.form == MPoly<Cyc>::monomial(2, {1, 2}, Cyc::zeta(3, 1)));
  CHECK_THROWS_AS(sym_act(SymGroupElement{{0}, {0, 1}}, f), std::invalid_argument);
  CHECK_THROWS_AS(sym_act(SymGroupElement{{0, 0}, {1, 1}}, f), std::invalid_argument);
}

TEST_CASE("orbit sizes divide the symmetric isotropy group order") {
  Rng rng(415);
  for (auto [n, d] : {std::pair{1, 3}, {1, 4}, {1, 5}, {2, 3}}) {
    long order = 1;
    for (int k = 0; k < n; ++k) order *= d;
    for (int k = 2; k <= n + 1; ++k) order *= k;
    for (int trial = 0; trial < 2; ++trial) {
      auto orbit = sym_orbit(random_symform(rng, n, d, 5));
      CHECK(order % static_cast<long>(orbit.size()) == 0);
    }
  }
}

TEST_CASE("generic binary quintics and sextics have orbits of size ten and twelve") {
  Rng rng(416);
  auto quintic = sym_orbit(random_symform(rng, 1, 5, 5));
  CHECK(quintic.size() == 10);
  auto sextic = sym_orbit(random_symform(rng, 1, 6, 5));
  CHECK(sextic.size() == 12);
}

TEST_CASE("orbit members share the characteristic polynomial over the cyclotomic field") {
  Rng rng(417);
  for (int d : {5, 6}) {
    SymFormQ f = random_symform(rng, 1, d, 4);
    PSTensorQ base = symmetric_to_ps(f);
    PSTensorQ uq = unit_tensor(1, d);
    PSTensor<Cyc> uc = cyc_unit_tensor(1, d);
    auto orbit = sym_orbit(f);
    REQUIRE(orbit.size() == static_cast<std::size_t>(2 * d));
    // equality of res(T - lambda u) at D+1 nodes pins the char poly itself
    std::vector<Rational> nodes = char_poly_nodes(eigencount(1, d) + 1);
    std::vector<Rational> base_vals;
    for (const Rational& x : nodes)
      base_vals.push_back(binary_pencil_res<Rational>(base, uq, x, Rational(1)));
    for (const auto& member : orbit) {
      PSTensor<Cyc> P = symmetric_to_ps(member);
      for (std::size_t k = 0; k < nodes.size(); ++k)
        CHECK(binary_pencil_res<Cyc>(P, uc, Cyc(nodes[k]), Cyc(1)) == Cyc(base_vals[k]));
    }
  }
}
