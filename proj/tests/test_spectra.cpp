#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "tenspec/disc_geometry.hpp"
#include "tenspec/sampling.hpp"
#include "tenspec/spectra.hpp"
#include "test_util.hpp"

using namespace tenspec;

namespace {

// symmetric binary form c0 x0^d + c1 x1^d as a tensor
PSTensorQ diagonal_tensor(int d, const Rational& c0, const Rational& c1) {
  MPolyQ f = MPolyQ::monomial(2, {d, 0}, c0) + MPolyQ::monomial(2, {0, d}, c1);
  return symmetric_to_ps(SymFormQ(1, d, f));
}

PSTensorQ random_nonsingular_sym(Rng& rng, int n, int d) {
  for (;;) {
    PSTensorQ T = symmetric_to_ps(random_symform(rng, n, d, 5));
    if (!is_zero(resultant(T))) return T;
  }
}

std::vector<Complex> pt2(double a, double b) {
  return normalize_projective({Complex(a, 0.0), Complex(b, 0.0)});
}

std::vector<Complex> pt3(double a, double b, double c) {
  return normalize_projective({Complex(a, 0.0), Complex(b, 0.0), Complex(c, 0.0)});
}

double point_gap(const std::vector<std::vector<Complex>>& pts, const std::vector<Complex>& w) {
  double best = 2.0;
  for (const auto& p : pts) best = std::min(best, projective_distance(p, w));
  return best;
}

}  // namespace

TEST_CASE("eigenvalues of the unit tensor and of T = t are one with full multiplicity") {
  for (int d : {3, 4}) {
    auto evs = eigenvalues(unit_tensor(1, d));
    REQUIRE(evs.size() == 1);
    CHECK(evs[0].value == Complex(1.0, 0.0));
    CHECK(evs[0].multiplicity == eigencount(1, d));
    REQUIRE(evs[0].exact.has_value());
    CHECK(*evs[0].exact == Rational(1));
  }
  auto evs2 = eigenvalues(unit_tensor(2, 3), unit_tensor(2, 3));
  REQUIRE(evs2.size() == 1);
  CHECK(evs2[0].multiplicity == 12);

  Rng rng(701);
  PSTensorQ T = random_nonsingular_sym(rng, 1, 3);
  auto evs3 = eigenvalues(T, T);
  REQUIRE(evs3.size() == 1);
  CHECK(*evs3[0].exact == Rational(1));
  CHECK(evs3[0].multiplicity == 4);
}

// oracle: for c0 x0^3 + c1 x1^3 against the unit tensor the pencil stays
// diagonal, disc((c0-l) x0^3 + (c1-l) x1^3) = -(c0-l)^2 (c1-l)^2, and
// dividing by -disc(x0^3+x1^3) = 1 gives chi = (l-c0)^2 (l-c1)^2
TEST_CASE("eigenvalues of a diagonal binary cubic come in double pairs") {
  auto evs = eigenvalues(diagonal_tensor(3, Rational(2), Rational(-3)));
  REQUIRE(evs.size() == 2);
  CHECK(*evs[0].exact == Rational(-3));
  CHECK(evs[0].multiplicity == 2);
  CHECK(*evs[1].exact == Rational(2));
  CHECK(evs[1].multiplicity == 2);
}

TEST_CASE("eigenvalues of random binary cubics have total multiplicity four") {
  Rng rng(702);
  for (int trial = 0; trial < 6; ++trial) {
    PSTensorQ T = random_nonsingular_sym(rng, 1, 3);
    UPolyQ chi = char_poly(T);
    auto evs = eigenvalues(T);
    int total = 0;
    for (const auto& ev : evs) {
      total += ev.multiplicity;
      if (ev.exact) CHECK(is_zero(chi.eval(*ev.exact)));
    }
    CHECK(total == 4);
    for (std::size_t i = 1; i < evs.size(); ++i) {
      bool ordered = evs[i - 1].value.real() < evs[i].value.real() ||
                     (evs[i - 1].value.real() == evs[i].value.real() &&
                      evs[i - 1].value.imag() < evs[i].value.imag());
      CHECK(ordered);
    }
  }
}

TEST_CASE("eigenvectors at a diagonal eigenvalue are the expected axis") {
  PSTensorQ T = diagonal_tensor(3, Rational(2), Rational(5));
  PSTensorQ u = unit_tensor(1, 3);

  EigenvectorSet at2 = eigenvectors_for(T, u, Rational(2));
  CHECK(!at2.infinite);
  REQUIRE(at2.points.size() == 1);
  CHECK(projective_distance(at2.points[0], pt2(1, 0)) < 1e-12);

  EigenvectorSet at5 = eigenvectors_for(T, u, Rational(5));
  REQUIRE(at5.points.size() == 1);
  CHECK(projective_distance(at5.points[0], pt2(0, 1)) < 1e-12);

  // the numeric route reaches the same axis
  EigenvectorSet num = eigenvectors_for(T, u, Complex(2.0, 0.0));
  REQUIRE(num.points.size() == 1);
  CHECK(projective_distance(num.points[0], pt2(1, 0)) < 1e-12);

  CHECK_THROWS_AS(eigenvectors_for(T, u, Rational(7)), std::invalid_argument);
  CHECK_THROWS_AS(eigenvectors_for(T, u, Complex(0.5, 11.0)), std::invalid_argument);
}

TEST_CASE("the unit tensor has an infinite eigenscheme at its only eigenvalue") {
  PSTensorQ u = unit_tensor(1, 3);
  EigenvectorSet set = eigenvectors_for(u, u, Rational(1));
  CHECK(set.infinite);
  CHECK(set.points.empty());

  EigenschemeReport rep = eigenscheme(u);
  CHECK(rep.infinite);
  CHECK(!rep.reduced);

  EigenschemeReport rep2 = eigenscheme(unit_tensor(2, 3));
  CHECK(rep2.infinite);
  CHECK(!rep2.reduced);
}

// gradient of x0 x1^2 - x2^3 vanishes only at the cusp (1 : 0 : 0); the
// component pair shares the factor x1, so the solver must fall through the
// frame changes to random combinations
TEST_CASE("the cuspidal cubic has the cusp as its only zero eigenvector") {
  MPolyQ f = MPolyQ::monomial(3, {1, 2, 0}, Rational(1)) +
             MPolyQ::monomial(3, {0, 0, 3}, Rational(-1));
  PSTensorQ T = symmetric_to_ps(SymFormQ(2, 3, f));
  PSTensorQ u = unit_tensor(2, 3);
  EigenvectorSet set = eigenvectors_for(T, u, Rational(0));
  CHECK(!set.infinite);
  REQUIRE(set.points.size() == 1);
  CHECK(projective_distance(set.points[0], pt3(1, 0, 0)) < 1e-8);
}

// both components x0 x1: Sing(T) is the two coordinate points, both with
// eigenvalue 0, and chi = l^2 (l^2 - 1); four distinct eigenvectors but a
// double eigenvalue, so the eigenscheme is not reduced
TEST_CASE("a two-point singular locus forces a non-reduced eigenscheme") {
  MPolyQ m = MPolyQ::monomial(2, {1, 1}, Rational(1));
  PSTensorQ T(1, 3, {m, m});
  auto evs = eigenvalues(T);
  REQUIRE(evs.size() == 3);
  CHECK(*evs[0].exact == Rational(-1));
  CHECK(evs[0].multiplicity == 1);
  CHECK(*evs[1].exact == Rational(0));
  CHECK(evs[1].multiplicity == 2);
  CHECK(*evs[2].exact == Rational(1));
  CHECK(evs[2].multiplicity == 1);

  EigenvectorSet at0 = eigenvectors_for(T, unit_tensor(1, 3), Rational(0));
  REQUIRE(at0.points.size() == 2);
  CHECK(projective_distance(at0.points[0], pt2(0, 1)) < 1e-12);
  CHECK(projective_distance(at0.points[1], pt2(1, 0)) < 1e-12);

  EigenschemeReport rep = eigenscheme(T);
  CHECK(!rep.infinite);
  CHECK(rep.pairs.size() == 4);
  CHECK(!rep.reduced);  // distinct vectors, but 0 is a double root
  CHECK(point_gap({rep.pairs[0].w}, pt2(1, -1)) < 1e-12);
  CHECK(point_gap({rep.pairs[3].w}, pt2(1, 1)) < 1e-12);
  for (const auto& pr : rep.pairs) CHECK(pr.residual <= 1e-8 * (1.0 + T.max_abs_coeff()));
}

TEST_CASE("eigenschemes of random symmetric binary quintics are reduced with eight points") {
  Rng rng(703);
  for (int trial = 0; trial < 2; ++trial) {
    PSTensorQ T = random_nonsingular_sym(rng, 1, 5);
    EigenschemeReport rep = eigenscheme(T);
    CHECK(!rep.infinite);
    REQUIRE(rep.pairs.size() == 8);
    CHECK(rep.reduced);
    for (const auto& pr : rep.pairs) {
      CHECK(pr.residual <= 1e-8 * (1.0 + T.max_abs_coeff()));
      double nn = 0.0;
      for (const Complex& c : pr.w) nn += std::norm(c);
      CHECK(std::abs(nn - 1.0) < 1e-12);
    }
    for (std::size_t i = 0; i < rep.pairs.size(); ++i)
      for (std::size_t j = i + 1; j < rep.pairs.size(); ++j)
        CHECK(projective_distance(rep.pairs[i].w, rep.pairs[j].w) > 1e-6);
  }
}

// the partially symmetric projection sees the same contractions as the dense
// array on repeated vectors, so its eigenpairs satisfy the dense eigen
// equation verbatim (and conversely)
TEST_CASE("eigenpairs of a dense tensor match its partially symmetric projection") {
  Rng rng(704);
  for (int shape = 0; shape < 2; ++shape) {
    int n = (shape == 0) ? 1 : 2;
    int count = 1;
    for (int k = 0; k < 3; ++k) count *= n + 1;
    std::vector<Rational> entries(count);
    for (auto& v : entries) v = rng.rational(5);
    DenseTensorQ A(n, 3, entries);
    PSTensorQ T = project_partially_symmetric(A);
    if (is_zero(resultant(T))) continue;
    PSTensorQ u = unit_tensor(n, 3);
    double scale = 0.0;
    for (const auto& v : entries) scale = std::max(scale, std::abs(to_double(v)));
    EigenschemeReport rep = eigenscheme(T, u);
    CHECK(!rep.pairs.empty());
    for (const auto& pr : rep.pairs) {
      auto lhs = dense_contract(A, pr.w);
      auto rhs = contract(u, pr.w);
      double r = 0.0;
      for (std::size_t i = 0; i < lhs.size(); ++i) r += std::norm(lhs[i] - pr.lambda * rhs[i]);
      CHECK(std::sqrt(r) <= 1e-8 * (1.0 + scale));
    }
  }
}

TEST_CASE("quadric common-zero solver pins coordinate configurations") {
  auto q01 = to_complex_poly(MPolyQ::monomial(3, {1, 1, 0}, Rational(1)));
  auto q02 = to_complex_poly(MPolyQ::monomial(3, {1, 0, 1}, Rational(1)));
  auto q12 = to_complex_poly(MPolyQ::monomial(3, {0, 1, 1}, Rational(1)));

  // pairwise coordinate products cut out the three axes; every pair of them
  // shares a factor, so only the combination fallback can eliminate
  QuadricZeros z = isolated_common_zeros_quadrics(q01, q02, q12);
  CHECK(!z.curve);
  REQUIRE(z.points.size() == 3);
  CHECK(projective_distance(z.points[0], pt3(0, 0, 1)) < 1e-8);
  CHECK(projective_distance(z.points[1], pt3(0, 1, 0)) < 1e-8);
  CHECK(projective_distance(z.points[2], pt3(1, 0, 0)) < 1e-8);

  // a common factor of all three leaves a whole line of solutions
  auto sq = to_complex_poly(MPolyQ::monomial(3, {2, 0, 0}, Rational(1)));
  QuadricZeros line = isolated_common_zeros_quadrics(sq, q01, q02);
  CHECK(line.curve);

  CHECK_THROWS_AS(isolated_common_zeros_quadrics(
                      to_complex_poly(MPolyQ::monomial(2, {1, 1}, Rational(1))), q01, q02),
                  std::invalid_argument);
  auto affine = to_complex_poly(MPolyQ::monomial(3, {2, 0, 0}, Rational(1)) +
                                MPolyQ::monomial(3, {1, 0, 0}, Rational(1)));
  CHECK_THROWS_AS(isolated_common_zeros_quadrics(affine, q01, q02), std::invalid_argument);
}

TEST_CASE("projective normalization and distance behave canonically") {
  auto v = normalize_projective({Complex(0.0, 0.0), Complex(0.0, 3.0)});
  CHECK(std::abs(v[0]) < 1e-15);
  CHECK(std::abs(v[1] - Complex(1.0, 0.0)) < 1e-15);

  auto w = normalize_projective({Complex(-2.0, 0.0), Complex(2.0, 0.0)});
  CHECK(w[0].real() > 0.0);
  CHECK(std::abs(w[0] - Complex(std::sqrt(0.5), 0.0)) < 1e-12);
  CHECK(std::abs(w[1] + Complex(std::sqrt(0.5), 0.0)) < 1e-12);

  CHECK(std::abs(projective_distance(pt2(1, 0), pt2(0, 1)) - std::sqrt(2.0)) < 1e-12);
  Complex phase = std::polar(1.0, 0.7);
  std::vector<Complex> a{Complex(0.6, 0.0), Complex(0.8, 0.0)};
  std::vector<Complex> b{a[0] * phase, a[1] * phase};
  CHECK(projective_distance(a, b) < 1e-12);
  CHECK_THROWS_AS(normalize_projective({Complex(0.0, 0.0)}), std::invalid_argument);
}

TEST_CASE("multiplicity lower bound matches the pinned binary examples") {
  PSTensorQ u = unit_tensor(1, 3);

  // triple line: chi = l^2 (l-1)^2 and the form sits with multiplicity 2
  PSTensorQ cube = symmetric_to_ps(SymFormQ(1, 3, MPolyQ::monomial(2, {3, 0}, Rational(1))));
  auto p = mult_lower_bound_check(cube, u, Rational(0));
  CHECK(p.first == 2);
  CHECK(p.second == 2);

  // one double root: the hypersurface multiplicity is 1
  PSTensorQ dbl = symmetric_to_ps(SymFormQ(1, 3, MPolyQ::monomial(2, {2, 1}, Rational(1))));
  auto p2 = mult_lower_bound_check(dbl, u, Rational(0));
  CHECK(p2.second == 1);
  CHECK(p2.first >= 1);

  // x0^3 + x1^3 + x0^2 x1 at lambda0 = 1: the pencil leaves x0^2 x1, whose
  // double root does not meet the unit form, so both multiplicities are 1
  MPolyQ f = MPolyQ::monomial(2, {3, 0}, Rational(1)) + MPolyQ::monomial(2, {0, 3}, Rational(1)) +
             MPolyQ::monomial(2, {2, 1}, Rational(1));
  PSTensorQ simple = symmetric_to_ps(SymFormQ(1, 3, f));
  auto p3 = mult_lower_bound_check(simple, u, Rational(1));
  CHECK(p3.first == 1);
  CHECK(p3.second == 1);

  MPolyQ m = MPolyQ::monomial(2, {1, 1}, Rational(1));
  CHECK_THROWS_AS(mult_lower_bound_check(PSTensorQ(1, 3, {m, m}), u, Rational(0)),
                  std::invalid_argument);  // not symmetric
  PSTensorQ diag = diagonal_tensor(3, Rational(2), Rational(5));
  CHECK_THROWS_AS(mult_lower_bound_check(diag, u, Rational(7)), std::invalid_argument);
  CHECK_THROWS_AS(mult_lower_bound_check(unit_tensor(2, 3), unit_tensor(2, 3), Rational(1)),
                  std::invalid_argument);
}

TEST_CASE("algebraic multiplicity dominates the hypersurface multiplicity on singular draws") {
  Rng rng(705);
  for (int d : {3, 4}) {
    PSTensorQ u = unit_tensor(1, d);
    for (const auto& partition : partitions_with_repeat(d)) {
      int expected = 0;
      for (int e : partition) expected += e - 1;
      for (int trial = 0; trial < 3; ++trial) {
        BuiltBinary built = random_singular_binary(d, partition, rng);
        PSTensorQ T = symmetric_to_ps(built.f);
        auto p = mult_lower_bound_check(T, u, Rational(0));
        CHECK(p.second == expected);
        CHECK(p.first >= p.second);
      }
    }
  }
}

TEST_CASE("eigenvector extraction rejects unsupported shapes") {
  Rng rng(706);
  PSTensorQ T = random_pstensor(rng, 2, 4, 5);
  CHECK_THROWS(eigenvectors_for(T, unit_tensor(2, 4), Rational(0)));
}

TEST_CASE("four distinct eigenvalues give four distinct eigenvectors for binary cubics") {
  Rng rng(707);
  int effective = 0;
  for (int trial = 0; trial < 5; ++trial) {
    PSTensorQ T = random_nonsingular_sym(rng, 1, 3);
    auto evs = eigenvalues(T);
    if (evs.size() != 4) continue;
    ++effective;
    EigenschemeReport rep = eigenscheme(T);
    CHECK(rep.reduced);
    CHECK(rep.pairs.size() == 4);
  }
  CHECK(effective >= 3);  // multiple eigenvalues are exceptional among random draws
}

TEST_CASE("eigenscheme pairs carry the residual invariant across random draws") {
  Rng rng(708);
  for (int trial = 0; trial < 3; ++trial) {
    PSTensorQ T = random_nonsingular_sym(rng, 1, 4);
    PSTensorQ t = random_nonsingular_sym(rng, 1, 4);
    EigenschemeReport rep = eigenscheme(T, t);
    if (rep.infinite) continue;
    CHECK(!rep.pairs.empty());
    for (const auto& pr : rep.pairs)
      CHECK(pr.residual <= 1e-8 * (1.0 + T.max_abs_coeff()));
  }
}
