#include <doctest.h>

#include <fstream>

#include "tenspec/resultant.hpp"
#include "tenspec/rng.hpp"
#include "test_util.hpp"

using namespace tenspec;

namespace {

Rational read_golden(const std::string& name) {
  std::ifstream in(std::string(TENSPEC_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::string s;
  in >> s;
  return parse_rational(s);
}

// a * prod (x0 - r_i x1) as an exact binary form
MPolyQ binary_from_root_list(const std::vector<Rational>& roots, const Rational& a) {
  MPolyQ f = MPolyQ::constant(2, a);
  for (const Rational& r : roots) {
    MPolyQ lin(2);
    lin.add_term({1, 0}, Rational(1));
    lin.add_term({0, 1}, -r);
    f = f * lin;
  }
  return f;
}

// classical resultant of two split forms of equal degree e:
// a^e b^e prod_{i,j} (alpha_i - beta_j)
Rational product_formula(const std::vector<Rational>& alpha, const Rational& a,
                         const std::vector<Rational>& beta, const Rational& b) {
  int e = static_cast<int>(alpha.size());
  Rational out = pow(a, e) * pow(b, e);
  for (const Rational& ai : alpha)
    for (const Rational& bj : beta) out *= (ai - bj);
  return out;
}

int column_order_sign(int e) { return (e * (e - 1) / 2) % 2 == 0 ? 1 : -1; }

PSTensorQ pair_tensor(int d, const MPolyQ& f0, const MPolyQ& f1) {
  return PSTensorQ(1, d, {f0, f1});
}

MPolyQ restrict_to_line(const MPolyQ& q) {
  // x2 = 0, keeping the ambient pair (x0, x1)
  MPolyQ out(2);
  for (const auto& [e, c] : q.terms())
    if (e[2] == 0) out.add_term({e[0], e[1]}, c);
  return out;
}

}  // namespace

TEST_CASE("binary resultant of the unit pair matches the frozen golden value") {
  PSTensorQ u = unit_tensor(1, 3);
  Rational r = resultant_binary(u);
  CHECK(r == rat(-1));
  CHECK(r == read_golden("res_unit_1_3.txt"));
}

TEST_CASE("binary resultant matches the split-form product formula") {
  // the interleaved column layout costs a fixed sign against the classical
  // two-block Sylvester convention: (-1)^{e(e-1)/2}
  SUBCASE("degree 2 pair") {
    MPolyQ f0 = binary_from_root_list({rat(1), rat(2)}, rat(2));
    MPolyQ f1 = binary_from_root_list({rat(3), rat(-1)}, rat(3));
    Rational oracle = product_formula({rat(1), rat(2)}, rat(2), {rat(3), rat(-1)}, rat(3));
    CHECK(resultant_binary(pair_tensor(3, f0, f1)) == Rational(column_order_sign(2)) * oracle);
  }
  SUBCASE("degree 3 pair") {
    std::vector<Rational> al = {rat(1), rat(2), rat(3)}, be = {rat(-1), rat(1, 2), rat(4)};
    MPolyQ f0 = binary_from_root_list(al, rat(1));
    MPolyQ f1 = binary_from_root_list(be, rat(2));
    Rational oracle = product_formula(al, rat(1), be, rat(2));
    CHECK(resultant_binary(pair_tensor(4, f0, f1)) == Rational(column_order_sign(3)) * oracle);
  }
  SUBCASE("degree 4 pair") {
    std::vector<Rational> al = {rat(1), rat(-2), rat(3), rat(5)}, be = {rat(2), rat(-1), rat(1, 3), rat(-4)};
    MPolyQ f0 = binary_from_root_list(al, rat(3));
    MPolyQ f1 = binary_from_root_list(be, rat(1));
    Rational oracle = product_formula(al, rat(3), be, rat(1));
    CHECK(resultant_binary(pair_tensor(5, f0, f1)) == Rational(column_order_sign(4)) * oracle);
  }
}

TEST_CASE("binary resultant vanishes exactly on common roots") {
  MPolyQ f0 = binary_from_root_list({rat(2), rat(1)}, rat(1));
  MPolyQ f1 = binary_from_root_list({rat(2), rat(-5)}, rat(1));
  CHECK(is_zero(resultant_binary(pair_tensor(3, f0, f1))));

  // common root at infinity [1:0]: both forms divisible by x1
  MPolyQ g0(2), g1(2);
  g0.add_term({1, 1}, Rational(1));                      // x0 x1
  g1.add_term({1, 1}, Rational(1));
  g1.add_term({0, 2}, Rational(-1));                     // x0 x1 - x1^2
  CHECK(is_zero(resultant_binary(pair_tensor(3, g0, g1))));

  // no common root anywhere
  MPolyQ h1(2);
  h1.add_term({2, 0}, Rational(1));
  h1.add_term({0, 2}, Rational(-1));                     // x0^2 - x1^2
  CHECK(!is_zero(resultant_binary(pair_tensor(3, g0, h1))));
}

TEST_CASE("macaulay resultant of the unit quadrics matches the frozen golden value") {
  PSTensorQ u = unit_tensor(2, 3);
  Rational r = resultant(u);
  CHECK(r == rat(1));
  CHECK(r == read_golden("res_unit_2_3.txt"));
}

TEST_CASE("macaulay resultant agrees with restriction to a line") {
  // res(q0, q1, x2^2) = res(q0|_{x2=0}, q1|_{x2=0})^2 via multiplicativity in
  // the last argument; squaring makes both sign conventions drop out
  Rng rng(401);
  MPolyQ x2sq = MPolyQ::monomial(3, {0, 0, 2}, Rational(1));
  for (int trial = 0; trial < 3; ++trial) {
    MPolyQ q0 = testutil::random_homogeneous_nonzero(rng, 3, 2);
    MPolyQ q1 = testutil::random_homogeneous_nonzero(rng, 3, 2);
    Rational lhs = resultant_ternary_quadrics(q0, q1, x2sq);
    Rational line = resultant_binary(pair_tensor(3, restrict_to_line(q0), restrict_to_line(q1)));
    CHECK(lhs == line * line);
  }
}

TEST_CASE("macaulay resultant transforms with det^8 under coordinate changes") {
  Rng rng(402);
  std::vector<std::vector<Rational>> g = {{rat(1), rat(1), rat(0)},
                                          {rat(0), rat(1), rat(2)},
                                          {rat(1), rat(0), rat(1)}};
  Rational det_g = rat(3);
  for (int trial = 0; trial < 2; ++trial) {
    MPolyQ q0 = testutil::random_homogeneous_nonzero(rng, 3, 2);
    MPolyQ q1 = testutil::random_homogeneous_nonzero(rng, 3, 2);
    MPolyQ q2 = testutil::random_homogeneous_nonzero(rng, 3, 2);
    Rational base = resultant_ternary_quadrics(q0, q1, q2);
    Rational moved = resultant_ternary_quadrics(q0.linear_change(g), q1.linear_change(g), q2.linear_change(g));
    CHECK(moved == pow(det_g, 8) * base);
  }
}

TEST_CASE("macaulay fallback frame agrees with an explicit frame change") {
  // q0 has no x0^2 term, which kills the extraneous minor in the natural frame
  MPolyQ q0(3), q1(3), q2(3);
  q0.add_term({0, 2, 0}, Rational(1));
  q0.add_term({1, 0, 1}, Rational(1));  // x1^2 + x0 x2
  q1.add_term({2, 0, 0}, Rational(1));
  q1.add_term({0, 1, 1}, Rational(1));  // x0^2 + x1 x2
  q2.add_term({0, 0, 2}, Rational(1));
  q2.add_term({1, 1, 0}, Rational(1));  // x2^2 + x0 x1

  Rational via_fallback = resultant_ternary_quadrics(q0, q1, q2);

  std::vector<std::vector<Rational>> g = {{rat(1), rat(0), rat(0)},
                                          {rat(1), rat(1), rat(0)},
                                          {rat(0), rat(0), rat(1)}};  // det 1
  Rational via_frame = resultant_ternary_quadrics(q0.linear_change(g), q1.linear_change(g), q2.linear_change(g));
  CHECK(via_fallback == via_frame);
  CHECK(!is_zero(via_fallback));
}

TEST_CASE("macaulay resultant vanishes exactly on a common zero") {
  // none of the quadrics has an x2^2 term, so all vanish at (0:0:1)
  MPolyQ q0(3), q1(3), q2(3);
  q0.add_term({2, 0, 0}, Rational(1));
  q0.add_term({1, 0, 1}, Rational(3));
  q0.add_term({0, 1, 1}, Rational(-1));
  q1.add_term({0, 2, 0}, Rational(1));
  q1.add_term({1, 1, 0}, Rational(1));
  q2.add_term({1, 0, 1}, Rational(1));
  q2.add_term({0, 1, 1}, Rational(1));
  CHECK(is_zero(resultant_ternary_quadrics(q0, q1, q2)));
}

TEST_CASE("zero forms force a zero resultant") {
  MPolyQ z = MPolyQ::zero(3);
  MPolyQ q = MPolyQ::monomial(3, {2, 0, 0}, Rational(1));
  CHECK(is_zero(resultant_ternary_quadrics(z, q, q)));
}

TEST_CASE("interpolation nodes are the pinned sequence") {
  auto nodes = char_poly_nodes(5);
  REQUIRE(nodes.size() == 5);
  CHECK(nodes[0] == Rational(0));
  CHECK(nodes[1] == Rational(1));
  CHECK(nodes[2] == Rational(-1));
  CHECK(nodes[3] == Rational(2));
  CHECK(nodes[4] == Rational(-2));
}

TEST_CASE("characteristic polynomial of the unit tensor is (lambda - 1)^D") {
  SUBCASE("n = 1, d = 3") {
    UPolyQ p = char_poly(unit_tensor(1, 3));
    CHECK(p == UPolyQ::from_roots({rat(1), rat(1), rat(1), rat(1)}, rat(1)));
  }
  SUBCASE("n = 2, d = 3") {
    UPolyQ p = char_poly(unit_tensor(2, 3));
    std::vector<Rational> ones(12, rat(1));
    CHECK(p == UPolyQ::from_roots(ones, rat(1)));
  }
}

TEST_CASE("characteristic polynomial matches a symbolic determinant oracle") {
  // res(T - lambda t) expanded exactly as det of the Sylvester matrix over
  // Q[lambda]; the interpolation route must reproduce its monic form
  Rng rng(403);
  for (int d : {3, 4}) {
    for (int trial = 0; trial < 3; ++trial) {
      PSTensorQ T = testutil::random_ps_tensor(rng, 1, d);
      PSTensorQ u = unit_tensor(1, d);
      int e = d - 1;
      std::vector<UPolyQ> f0(e + 1), f1(e + 1);
      auto tc0 = binary_coeffs(T.components[0], e), tc1 = binary_coeffs(T.components[1], e);
      auto uc0 = binary_coeffs(u.components[0], e), uc1 = binary_coeffs(u.components[1], e);
      for (int k = 0; k <= e; ++k) {
        f0[k] = UPolyQ({tc0[k], -uc0[k]});
        f1[k] = UPolyQ({tc1[k], -uc1[k]});
      }
      UPolyQ numerator = det_cofactor(sylvester_pair(f0, f1, UPolyQ::zero()));
      int D = eigencount(1, d);
      REQUIRE(numerator.degree() == D);
      Rational lead = (D % 2 == 0) ? resultant_binary(u) : -resultant_binary(u);
      CHECK(numerator.lead() == lead);
      CHECK(char_poly(T) == numerator.monic());
    }
  }
}

TEST_CASE("characteristic polynomial coefficients scale by tensor degree") {
  // c_i, the coefficient of lambda^{D-i}, is homogeneous of degree i in T
  Rng rng(404);
  PSTensorQ T = testutil::random_ps_tensor(rng, 1, 3);
  int D = eigencount(1, 3);
  UPolyQ p = char_poly(T);
  UPolyQ p3 = char_poly(T * rat(3));
  for (int k = 0; k <= D; ++k) CHECK(p3.coeff(k) == pow(rat(3), D - k) * p.coeff(k));
}

TEST_CASE("char_poly rejects bad frames") {
  PSTensorQ T = unit_tensor(1, 3);
  MPolyQ x1sq = MPolyQ::monomial(2, {0, 2}, Rational(1));
  PSTensorQ degenerate(1, 3, {x1sq, x1sq});
  CHECK_THROWS_AS(char_poly(T, degenerate), std::invalid_argument);  // res(t) = 0
  CHECK_THROWS(char_poly(T, unit_tensor(1, 3), char_poly_nodes(3)));  // wrong node count
  CHECK_THROWS(char_poly(T, unit_tensor(1, 4)));                      // shape mismatch
}

TEST_CASE("resultant dispatch rejects unsupported shapes") {
  CHECK_THROWS_AS(resultant(unit_tensor(2, 4)), std::invalid_argument);
  CHECK_THROWS_AS(resultant(unit_tensor(3, 3)), std::invalid_argument);
}
