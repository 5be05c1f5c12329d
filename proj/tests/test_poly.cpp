#include <doctest.h>

#include "tenspec/poly.hpp"
#include "tenspec/rng.hpp"
#include "test_util.hpp"

using namespace tenspec;
using testutil::random_mpoly;
using testutil::random_point;
using testutil::random_upoly;

TEST_CASE("monomial enumeration is graded-lex descending and complete") {
  auto m = monomials_of_degree(2, 3);
  REQUIRE(m.size() == 4);
  CHECK(m[0] == Exponents{3, 0});
  CHECK(m[1] == Exponents{2, 1});
  CHECK(m[2] == Exponents{1, 2});
  CHECK(m[3] == Exponents{0, 3});

  auto m3 = monomials_of_degree(3, 4);
  CHECK(m3.size() == 15);
  CHECK(m3.front() == Exponents{4, 0, 0});
  CHECK(m3.back() == Exponents{0, 0, 4});
  GradedLexDesc lt;
  for (std::size_t i = 0; i + 1 < m3.size(); ++i) CHECK(lt(m3[i], m3[i + 1]));
}

TEST_CASE("mpoly arithmetic agrees with evaluation") {
  Rng rng(101);
  for (int trial = 0; trial < 8; ++trial) {
    MPolyQ p = random_mpoly(rng, 3, 3, false);
    MPolyQ q = random_mpoly(rng, 3, 3, false);
    auto v = random_point(rng, 3);
    Rational pv = p.eval<Rational>(v), qv = q.eval<Rational>(v);
    CHECK((p + q).eval<Rational>(v) == pv + qv);
    CHECK((p - q).eval<Rational>(v) == pv - qv);
    CHECK((p * q).eval<Rational>(v) == pv * qv);
    CHECK((-p).eval<Rational>(v) == -pv);
    CHECK((p * rat(3, 7)).eval<Rational>(v) == pv * rat(3, 7));
  }
}

TEST_CASE("partial derivative matches central differences") {
  Rng rng(102);
  for (int trial = 0; trial < 5; ++trial) {
    MPolyQ p = random_mpoly(rng, 3, 4, false);
    std::vector<double> x = {rng.double_in(-1, 1), rng.double_in(-1, 1), rng.double_in(-1, 1)};
    const double h = 1e-5;
    for (int i = 0; i < 3; ++i) {
      std::vector<double> xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      double fd = (p.eval<double>(xp) - p.eval<double>(xm)) / (2 * h);
      double exact = p.partial_derivative(i).eval<double>(x);
      CHECK(std::abs(fd - exact) <= 1e-6 * (1.0 + std::abs(exact) + p.max_abs_coeff()));
    }
  }
}

TEST_CASE("Euler identity for homogeneous polynomials") {
  Rng rng(103);
  for (int trial = 0; trial < 5; ++trial) {
    int d = 3 + trial % 3;
    MPolyQ p = testutil::random_homogeneous_nonzero(rng, 3, d);
    MPolyQ acc(3);
    for (int i = 0; i < 3; ++i) acc = acc + MPolyQ::variable(3, i, Rational(1)) * p.partial_derivative(i);
    CHECK(acc == p * Rational(d));
  }
}

TEST_CASE("variable permutation and scaling act by substitution") {
  Rng rng(104);
  MPolyQ p = random_mpoly(rng, 3, 3, false);
  std::vector<int> img = {2, 0, 1};  // x0->x2, x1->x0, x2->x1
  MPolyQ p2 = p.permute_vars(img);
  auto v = random_point(rng, 3);
  std::vector<Rational> w(3);
  for (int i = 0; i < 3; ++i) w[i] = v[img[i]];
  CHECK(p2.eval<Rational>(v) == p.eval<Rational>(w));

  std::vector<Rational> a = {rat(2), rat(-1, 3), rat(5, 7)};
  MPolyQ ps = p.scale_vars(a);
  std::vector<Rational> av(3);
  for (int i = 0; i < 3; ++i) av[i] = a[i] * v[i];
  CHECK(ps.eval<Rational>(v) == p.eval<Rational>(av));
}

TEST_CASE("substitute and linear_change evaluate through") {
  Rng rng(105);
  MPolyQ p = random_mpoly(rng, 2, 3, false);
  std::vector<MPolyQ> g = {random_mpoly(rng, 3, 2, false), random_mpoly(rng, 3, 2, false)};
  MPolyQ comp = p.substitute(g);
  auto v = random_point(rng, 3);
  std::vector<Rational> gv = {g[0].eval<Rational>(v), g[1].eval<Rational>(v)};
  CHECK(comp.eval<Rational>(v) == p.eval<Rational>(gv));

  MPolyQ q = random_mpoly(rng, 3, 3, false);
  std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3));
  for (auto& row : m)
    for (auto& c : row) c = rng.rational(4);
  MPolyQ qc = q.linear_change(m);
  auto u = random_point(rng, 3);
  std::vector<Rational> mu(3, Rational(0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) mu[i] += m[i][j] * u[j];
  CHECK(qc.eval<Rational>(u) == q.eval<Rational>(mu));
}

TEST_CASE("polynomial text round trip") {
  Rng rng(106);
  for (int trial = 0; trial < 10; ++trial) {
    MPolyQ p = random_mpoly(rng, 3, 3, false);
    CHECK(parse_mpoly(to_string(p), 3) == p);
  }
  CHECK(to_string(MPolyQ::zero(2)) == "0");
  CHECK(parse_mpoly("0", 2) == MPolyQ::zero(2));

  MPolyQ f(2);
  f.add_term({2, 0}, Rational(1));
  f.add_term({0, 1}, rat(-1, 2));
  CHECK(to_string(f) == "1*x0^2+-1/2*x1");
  CHECK(parse_mpoly("x0^2 - 1/2*x1", 2) == f);  // tolerant spacing, bare leading monomial
  CHECK(parse_mpoly("x0*x0 - 1/2*x1", 2) == f);

  CHECK_THROWS(parse_mpoly("", 2));
  CHECK_THROWS(parse_mpoly("x5", 2));
  CHECK_THROWS(parse_mpoly("x0^-1", 2));
  CHECK_THROWS(parse_mpoly("2**x0", 2));
  CHECK_THROWS(parse_mpoly("1/0", 2));
}

TEST_CASE("homogeneity and degree bookkeeping") {
  MPolyQ p(2);
  p.add_term({2, 1}, Rational(4));
  p.add_term({0, 3}, Rational(-1));
  CHECK(p.is_homogeneous());
  CHECK(p.degree() == 3);
  p.add_term({1, 0}, Rational(1));
  CHECK_FALSE(p.is_homogeneous());
  CHECK(MPolyQ::zero(2).is_homogeneous());
  CHECK(MPolyQ::zero(2).degree() == -1);

  // cancellation drops terms entirely
  MPolyQ q(2);
  q.add_term({1, 1}, Rational(5));
  q.add_term({1, 1}, Rational(-5));
  CHECK(q.is_zero_poly());
}

TEST_CASE("upoly division satisfies the Euclidean property") {
  Rng rng(107);
  for (int trial = 0; trial < 8; ++trial) {
    UPolyQ p = random_upoly(rng, 6);
    UPolyQ d = random_upoly(rng, 2 + static_cast<int>(trial % 3));
    auto [q, r] = p.divrem(d);
    CHECK(q * d + r == p);
    CHECK(r.degree() < d.degree());
  }
}

TEST_CASE("upoly from_roots evaluates to zero at its roots") {
  UPolyQ p = UPolyQ::from_roots({rat(1), rat(-2), rat(1, 3)}, rat(6));
  CHECK(p.degree() == 3);
  CHECK(p.lead() == rat(6));
  CHECK(is_zero(p.eval<Rational>(rat(1))));
  CHECK(is_zero(p.eval<Rational>(rat(-2))));
  CHECK(is_zero(p.eval<Rational>(rat(1, 3))));
  CHECK(!is_zero(p.eval<Rational>(rat(2))));
}

TEST_CASE("interpolation recovers exact rational polynomials") {
  Rng rng(108);
  for (int trial = 0; trial < 6; ++trial) {
    UPolyQ p = random_upoly(rng, 6);
    std::vector<Rational> nodes = {rat(0), rat(1), rat(-1), rat(2), rat(-2), rat(3), rat(-3)};
    std::vector<Rational> values;
    for (const auto& t : nodes) values.push_back(p.eval<Rational>(t));
    CHECK(interpolate(nodes, values) == p);
  }
  CHECK_THROWS(interpolate<Rational>({rat(1), rat(1)}, {rat(0), rat(0)}));
  CHECK_THROWS(interpolate<Rational>({}, {}));
}

TEST_CASE("vanishing order at the origin") {
  UPolyQ t = UPolyQ({rat(0), rat(1)});
  UPolyQ p = t * t * t * (t - UPolyQ::constant(rat(1)));
  CHECK(vanishing_order(p) == 3);
  CHECK(vanishing_order(UPolyQ::constant(rat(5))) == 0);
  CHECK(vanishing_order(t) == 1);
  CHECK_FALSE(vanishing_order(UPolyQ::zero()).has_value());
}

TEST_CASE("gcd basics") {
  UPolyQ g = UPolyQ::from_roots({rat(-2)}, rat(1));
  UPolyQ a = UPolyQ::from_roots({rat(1), rat(-2)}, rat(5));
  UPolyQ b = UPolyQ::from_roots({rat(4), rat(-2)}, rat(7));
  CHECK(gcd(a, b) == g);
  CHECK(gcd(a, UPolyQ::zero()) == a.monic());
  CHECK(gcd(UPolyQ::zero(), UPolyQ::zero()).is_zero_poly());
  // coprime inputs give 1
  CHECK(gcd(UPolyQ::from_roots({rat(1)}, rat(1)), UPolyQ::from_roots({rat(2)}, rat(1))).degree() == 0);
}

TEST_CASE("square-free decomposition recovers multiplicities") {
  UPolyQ f1 = UPolyQ::from_roots({rat(1)}, rat(1));
  UPolyQ f3 = UPolyQ::from_roots({rat(-3)}, rat(1));
  UPolyQ p = f1 * f1 * f3 * rat(5);
  auto parts = square_free_decomposition(p);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].factor == f3);
  CHECK(parts[0].multiplicity == 1);
  CHECK(parts[1].factor == f1);
  CHECK(parts[1].multiplicity == 2);

  // reassembly and pairwise structure on a random squared pattern
  Rng rng(109);
  UPolyQ a = random_upoly(rng, 2).monic();
  UPolyQ b = random_upoly(rng, 1).monic();
  while (gcd(a, b).degree() > 0 || gcd(a, a.derivative()).degree() > 0) {
    a = random_upoly(rng, 2).monic();
    b = random_upoly(rng, 1).monic();
  }
  UPolyQ q = a * b * b * b * rat(-7, 2);
  auto qparts = square_free_decomposition(q);
  UPolyQ re = UPolyQ::constant(rat(1));
  for (const auto& part : qparts) {
    CHECK(gcd(part.factor, part.factor.derivative()).degree() == 0);  // square-free
    for (int k = 0; k < part.multiplicity; ++k) re = re * part.factor;
  }
  CHECK(re == q.monic());
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == rat(3, 4));
  CHECK(parse_rational("-7") == rat(-7));
  CHECK(parse_rational("0/5") == Rational(0));
  CHECK(parse_rational("6/4") == rat(3, 2));
  CHECK_THROWS(parse_rational("1/0"));
}
