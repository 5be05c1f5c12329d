#include "tenspec/cubic_orbits.hpp"

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "tenspec/resultant.hpp"
#include "tenspec/sampling.hpp"

namespace tenspec {

namespace {

using Exp = Exponents;

MPolyQ mono(int e0, int e1, int e2, const Rational& c) {
  MPolyQ p(3);
  p.add_term(Exp{e0, e1, e2}, c);
  return p;
}

MPolyQ linear_form(const std::vector<Rational>& v) {
  MPolyQ l(3);
  for (int i = 0; i < 3; ++i) l.add_term(Exp{i == 0, i == 1, i == 2}, v[i]);
  return l;
}

void require_cubic(const SymFormQ& f, const char* who) {
  if (f.n != 2 || f.d != 3) throw std::invalid_argument(std::string(who) + ": ternary cubics only");
  if (f.form.is_zero_poly()) throw std::invalid_argument(std::string(who) + ": zero form");
}

bool proportional(const MPolyQ& f, const MPolyQ& g) {
  if (f.is_zero_poly() || g.is_zero_poly()) return true;
  const auto& [e0, c0] = *f.terms().begin();
  Rational lam = g.coeff(e0) / c0;
  if (is_zero(lam)) return false;
  return g == f * lam;
}

// f(sA + tB) as a binary form in (s, t).
template <class C>
MPoly<C> restrict_to_line(const MPoly<C>& f, const std::array<C, 3>& A, const std::array<C, 3>& B) {
  std::vector<MPoly<C>> sub;
  sub.reserve(3);
  for (int i = 0; i < 3; ++i) {
    MPoly<C> li(2);
    li.add_term(Exp{1, 0}, A[i]);
    li.add_term(Exp{0, 1}, B[i]);
    sub.push_back(std::move(li));
  }
  return f.substitute(sub);
}

// Basis of the plane l = 0, pivoting on coordinate `pivot` of l.
template <class C>
std::pair<std::array<C, 3>, std::array<C, 3>> plane_basis(const std::array<C, 3>& l, int pivot) {
  std::array<std::array<C, 3>, 2> out{};
  int row = 0;
  for (int j = 0; j < 3; ++j) {
    if (j == pivot) continue;
    out[row][j] = C(1);
    out[row][pivot] = -l[j] / l[pivot];
    ++row;
  }
  return {out[0], out[1]};
}

std::array<Rational, 3> form_coeffs(const MPolyQ& l) {
  return {l.coeff(Exp{1, 0, 0}), l.coeff(Exp{0, 1, 0}), l.coeff(Exp{0, 0, 1})};
}

MPolyQ restrict_to_plane(const MPolyQ& f, const MPolyQ& l) {
  std::array<Rational, 3> lv = form_coeffs(l);
  int pivot = -1;
  for (int i = 0; i < 3 && pivot < 0; ++i)
    if (!is_zero(lv[i])) pivot = i;
  if (pivot < 0) throw std::invalid_argument("restrict_to_plane: zero linear form");
  auto [A, B] = plane_basis(lv, pivot);
  return restrict_to_line(f, A, B);
}

// l | f iff f vanishes identically on the plane l = 0.
bool divides_linear(const MPolyQ& f, const MPolyQ& l) {
  return restrict_to_plane(f, l).is_zero_poly();
}

// Exact quotient f / l for a linear divisor: synthetic division in the pivot
// variable of l. Throws when l does not divide f.
MPolyQ quotient_by_linear(const MPolyQ& f, const MPolyQ& l) {
  std::array<Rational, 3> lv = form_coeffs(l);
  int k = -1;
  for (int i = 0; i < 3 && k < 0; ++i)
    if (!is_zero(lv[i])) k = i;
  if (k < 0) throw std::invalid_argument("quotient_by_linear: zero divisor");
  MPolyQ rem = f, quot(3);
  while (true) {
    const Exp* top = nullptr;
    for (const auto& [e, c] : rem.terms())
      if (e[k] >= 1 && (!top || e[k] > (*top)[k])) top = &e;
    if (!top) break;
    Exp e = *top;
    Rational c = rem.coeff(e) / lv[k];
    e[k] -= 1;
    MPolyQ t(3);
    t.add_term(e, c);
    quot = quot + t;
    rem = rem - l * t;
  }
  if (!rem.is_zero_poly()) throw std::logic_error("quotient_by_linear: not divisible");
  return quot;
}

std::vector<Rational> cross(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& c : v)
    if (!is_zero(c)) return false;
  return true;
}

// Rational points of Z(f) on the line spanned by A, B: exact roots of the
// restriction. A zero restriction means the whole line lies on the curve.
struct LineProbe {
  bool on_curve = false;
  std::vector<Rational> span_form;              // the line itself, when on_curve
  std::vector<std::vector<Rational>> points;
};

LineProbe probe_line(const SymFormQ& f, Rng& rng) {
  while (true) {
    std::array<Rational, 3> A, B;
    for (int i = 0; i < 3; ++i) {
      A[i] = rng.rational(9);
      B[i] = rng.rational(9);
    }
    std::vector<Rational> Av{A[0], A[1], A[2]}, Bv{B[0], B[1], B[2]};
    std::vector<Rational> span = cross(Av, Bv);
    if (all_zero(span)) continue;
    MPolyQ r = restrict_to_line(f.form, A, B);
    LineProbe out;
    if (r.is_zero_poly()) {
      out.on_curve = true;
      out.span_form = std::move(span);
      return out;
    }
    for (const auto& root : factor_binary(SymFormQ(1, 3, r)).roots) {
      if (!root.at_infinity && !root.exact_value) continue;
      std::vector<Rational> P(3);
      for (int i = 0; i < 3; ++i) P[i] = root.at_infinity ? A[i] : A[i] * *root.exact_value + B[i];
      if (!all_zero(P)) out.points.push_back(std::move(P));
    }
    return out;
  }
}

// Rational linear factor of f, or nullopt. Every rational line on the curve
// meets two random probe lines in rational points, so joining rational points
// across two probes and testing exact divisibility finds it.
std::optional<MPolyQ> rational_linear_factor(const SymFormQ& f, Rng& rng) {
  for (int attempt = 0; attempt < 12; ++attempt) {
    LineProbe a = probe_line(f, rng);
    if (a.on_curve) {
      MPolyQ l = linear_form(a.span_form);
      if (divides_linear(f.form, l)) return l;
      continue;
    }
    LineProbe b = probe_line(f, rng);
    if (b.on_curve) {
      MPolyQ l = linear_form(b.span_form);
      if (divides_linear(f.form, l)) return l;
      continue;
    }
    for (const auto& P : a.points)
      for (const auto& Q : b.points) {
        std::vector<Rational> lv = cross(P, Q);
        if (all_zero(lv)) continue;  // same point on both probes
        MPolyQ l = linear_form(lv);
        if (divides_linear(f.form, l)) return l;
      }
  }
  return std::nullopt;
}

int rank3(std::array<std::array<Rational, 3>, 3> m) {
  int rank = 0;
  for (int col = 0; col < 3 && rank < 3; ++col) {
    int piv = -1;
    for (int r = rank; r < 3 && piv < 0; ++r)
      if (!is_zero(m[r][col])) piv = r;
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = rank + 1; r < 3; ++r) {
      if (is_zero(m[r][col])) continue;
      Rational q = m[r][col] / m[rank][col];
      for (int c = col; c < 3; ++c) m[r][c] -= q * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

const char* kNodal = "nodal";
const char* kCuspidal = "cuspidal";
const char* kConicSecant = "conic+secant";
const char* kConicTangent = "conic+tangent";
const char* kTriangle = "triangle";
const char* kAsterisk = "asterisk";
const char* kLineDoubleLine = "line+double-line";
const char* kTripleLine = "triple-line";
const char* kInconclusive = "inconclusive";

// Exact classification of f = l * q with l rational linear and q the exact
// quadric quotient; complete over the closure because every further branch
// reads exact rational data.
std::string classify_line_times_quadric(const MPolyQ& l, const MPolyQ& q) {
  if (divides_linear(q, l)) {
    // f = l^2 m
    MPolyQ m = quotient_by_linear(q, l);
    return proportional(m, l) ? kTripleLine : kLineDoubleLine;
  }
  std::array<std::array<Rational, 3>, 3> M;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Exp e{0, 0, 0};
      e[i] += 1;
      e[j] += 1;
      M[i][j] = i == j ? q.coeff(e) : q.coeff(e) / 2;
    }
  int rank = rank3(M);
  if (rank == 3) {
    // smooth conic: tangency iff the restriction to l has a double root
    MPolyQ r = restrict_to_plane(q, l);
    Rational a = r.coeff(Exp{2, 0}), b = r.coeff(Exp{1, 1}), c = r.coeff(Exp{0, 2});
    return is_zero(b * b - Rational(4) * a * c) ? kConicTangent : kConicSecant;
  }
  if (rank == 2) {
    // q = two distinct lines meeting at the kernel vertex v; three concurrent
    // lines iff l passes through v
    std::vector<Rational> rows[3] = {{M[0][0], M[0][1], M[0][2]},
                                     {M[1][0], M[1][1], M[1][2]},
                                     {M[2][0], M[2][1], M[2][2]}};
    std::vector<Rational> v;
    for (int i = 0; i < 3 && v.empty(); ++i)
      for (int j = i + 1; j < 3 && v.empty(); ++j) {
        std::vector<Rational> c2 = cross(rows[i], rows[j]);
        if (!all_zero(c2)) v = std::move(c2);
      }
    if (v.empty()) return kInconclusive;  // cannot happen at rank 2
    Rational lv = l.coeff(Exp{1, 0, 0}) * v[0] + l.coeff(Exp{0, 1, 0}) * v[1] +
                  l.coeff(Exp{0, 0, 1}) * v[2];
    return is_zero(lv) ? kAsterisk : kTriangle;
  }
  if (rank == 1) return kLineDoubleLine;  // q = c m^2 with m not proportional to l
  return kInconclusive;                   // q = 0 cannot happen
}

// Vertex of f when f is a cone: rational dependence sum c_i d_i f = 0 of the
// three partial quadrics, solved exactly; the dependence vector is the vertex.
std::optional<std::vector<Rational>> cone_vertex(const MPolyQ& f) {
  static const std::array<Exp, 6> monos{Exp{2, 0, 0}, Exp{1, 1, 0}, Exp{1, 0, 1},
                                        Exp{0, 2, 0}, Exp{0, 1, 1}, Exp{0, 0, 2}};
  // equations (one per quadric monomial) in the unknowns c0, c1, c2
  std::vector<std::array<Rational, 3>> eqs;
  for (const auto& m : monos) {
    std::array<Rational, 3> row;
    for (int i = 0; i < 3; ++i) row[i] = f.partial_derivative(i).coeff(m);
    eqs.push_back(row);
  }
  // Gaussian elimination to echelon form over the three unknowns
  std::array<int, 3> pivot_row{-1, -1, -1};
  int rank = 0;
  for (int col = 0; col < 3; ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(eqs.size()) && piv < 0; ++r)
      if (!is_zero(eqs[r][col])) piv = r;
    if (piv < 0) continue;
    std::swap(eqs[rank], eqs[piv]);
    for (int r = 0; r < static_cast<int>(eqs.size()); ++r) {
      if (r == rank || is_zero(eqs[r][col])) continue;
      Rational q = eqs[r][col] / eqs[rank][col];
      for (int c = 0; c < 3; ++c) eqs[r][c] -= q * eqs[rank][c];
    }
    pivot_row[col] = rank;
    ++rank;
  }
  if (rank == 3) return std::nullopt;
  // back-substitute with the first free unknown set to 1
  int free_col = 0;
  while (pivot_row[free_col] >= 0) ++free_col;
  std::vector<Rational> c(3, Rational(0));
  c[free_col] = Rational(1);
  for (int col = 0; col < 3; ++col) {
    if (pivot_row[col] < 0) continue;
    const auto& row = eqs[pivot_row[col]];
    Rational acc(0);
    for (int j = 0; j < 3; ++j)
      if (j != col) acc += row[j] * c[j];
    c[col] = -acc / row[col];
  }
  return c;
}

// Certified rational singular point: reconstruct coordinates in the chart of
// the largest one, then verify all three partials vanish exactly. The probe
// tolerates sizable solver noise because the exact check has the last word.
std::optional<std::vector<Rational>> rational_point(const std::vector<Complex>& p,
                                                    const std::array<MPolyQ, 3>& grad) {
  int m = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(p[i]) > std::abs(p[m])) m = i;
  std::vector<Rational> q(3);
  for (int i = 0; i < 3; ++i) {
    Complex z = p[i] / p[m];
    if (std::abs(z.imag()) > 1e-4) return std::nullopt;
    auto r = reconstruct_rational(z.real());
    if (!r) return std::nullopt;
    q[i] = *r;
  }
  for (const auto& gi : grad)
    if (!is_zero(gi.eval(q))) return std::nullopt;
  return q;
}

TangentConeComponent at_point(Rational p0, Rational p1, Rational p2, int mult) {
  return {TangentConeKind::hyperplane_at_point, {std::move(p0), std::move(p1), std::move(p2)}, mult};
}

TangentConeComponent over_line(Rational l0, Rational l1, Rational l2, int mult) {
  return {TangentConeKind::singular_cone_over_line, {std::move(l0), std::move(l1), std::move(l2)}, mult};
}

std::vector<OrbitDescriptor> build_orbit_table() {
  std::vector<OrbitDescriptor> t;
  // nodal: x0 x1^2 - x2^2 (x2 - x0), singular exactly at (1:0:0)
  t.push_back({kNodal,
               SymFormQ(2, 3, mono(1, 2, 0, 1) - mono(0, 0, 3, 1) + mono(1, 0, 2, 1)),
               1,
               {at_point(1, 0, 0, 1)}});
  // cuspidal: x0 x1^2 - x2^3, cusp at (1:0:0)
  t.push_back({kCuspidal,
               SymFormQ(2, 3, mono(1, 2, 0, 1) - mono(0, 0, 3, 1)),
               2,
               {at_point(1, 0, 0, 2)}});
  // conic+secant: x0 (x0^2 + x1 x2), meets at (0:1:0) and (0:0:1)
  t.push_back({kConicSecant,
               SymFormQ(2, 3, mono(3, 0, 0, 1) + mono(1, 1, 1, 1)),
               2,
               {at_point(0, 1, 0, 1), at_point(0, 0, 1, 1)}});
  // conic+tangent: x0 (x0 x1 + x2^2), tangency at (0:1:0)
  t.push_back({kConicTangent,
               SymFormQ(2, 3, mono(2, 1, 0, 1) + mono(1, 0, 2, 1)),
               3,
               {at_point(0, 1, 0, 3)}});
  // triangle: x0 x1 x2, vertices at the coordinate points
  t.push_back({kTriangle,
               SymFormQ(2, 3, mono(1, 1, 1, 1)),
               3,
               {at_point(1, 0, 0, 1), at_point(0, 1, 0, 1), at_point(0, 0, 1, 1)}});
  // asterisk: x0 x1 (x0 + x1), concurrent at (0:0:1)
  t.push_back({kAsterisk,
               SymFormQ(2, 3, mono(2, 1, 0, 1) + mono(1, 2, 0, 1)),
               4,
               {at_point(0, 0, 1, 4)}});
  // line+double-line: x0^2 x1; H_p at the intersection carries multiplicity 2,
  // the degree-4 cone over the doubled line x0 carries multiplicity 1
  t.push_back({kLineDoubleLine,
               SymFormQ(2, 3, mono(2, 1, 0, 1)),
               6,
               {at_point(0, 0, 1, 2), over_line(1, 0, 0, 1)}});
  // triple line: x0^3
  t.push_back({kTripleLine,
               SymFormQ(2, 3, mono(3, 0, 0, 1)),
               8,
               {over_line(1, 0, 0, 2)}});
  return t;
}

}  // namespace

const std::vector<OrbitDescriptor>& orbit_table() {
  static const std::vector<OrbitDescriptor> table = build_orbit_table();
  return table;
}

QuadricZeros singular_points_cubic(const SymFormQ& f, const RunConfig& cfg) {
  require_cubic(f, "singular_points_cubic");
  std::array<MPolyC, 3> g;
  for (int i = 0; i < 3; ++i) g[i] = to_complex_poly(f.form.partial_derivative(i));
  return isolated_common_zeros_quadrics(g[0], g[1], g[2], cfg);
}

std::string classify_cubic(const SymFormQ& f, const RunConfig& cfg) {
  require_cubic(f, "classify_cubic");
  // The Macaulay quotient can degenerate on special singular systems; the
  // pipeline below then decides without the discriminant value.
  try {
    if (!is_zero(discriminant(f, cfg))) return "smooth";
  } catch (const std::domain_error&) {
  }

  // Exact branch 1: rational linear factor. Conic+line, triangles and the
  // non-reduced strata over Q all land here, decided with no numerics.
  Rng rng = Rng(cfg.seed).fork(0xcb1c0d);
  if (auto l = rational_linear_factor(f, rng))
    return classify_line_times_quadric(*l, quotient_by_linear(f.form, *l));

  // Exact branch 2: cones. An asterisk with an irrational line orbit has no
  // rational factor, but its partials are linearly dependent over Q.
  if (auto v = cone_vertex(f.form)) {
    int k = 0;
    for (int i = 1; i < 3; ++i)
      if (!is_zero((*v)[i])) k = i;  // any chart with v_k != 0 works; take the last
    std::array<Rational, 3> A{}, B{};
    A[(k + 1) % 3] = Rational(1);
    B[(k + 2) % 3] = Rational(1);
    MPolyQ r = restrict_to_line(f.form, A, B);
    if (r.is_zero_poly()) return kInconclusive;
    // distinct lines through the vertex make an asterisk; repeated lines are
    // non-reduced and should have produced a rational factor
    return mult_disc_binary(SymFormQ(1, 3, r)) == 0 ? kAsterisk : kInconclusive;
  }

  // Remaining strata: nodal, cuspidal, or a triangle whose lines form an
  // irrational Galois orbit. All have isolated singular points.
  QuadricZeros z = singular_points_cubic(f, cfg);
  if (z.curve) return kInconclusive;  // a doubled line would be rational
  const auto& pts = z.points;
  if (pts.empty()) return kInconclusive;  // singular by the gate, yet nothing found
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (projective_distance(pts[i], pts[j]) < 1e-3)
        return kInconclusive;  // straddles the solver's merge tolerance
  if (pts.size() == 3) return kTriangle;
  if (pts.size() != 1) return kInconclusive;  // two points imply a rational line

  std::array<MPolyQ, 3> grad;
  std::array<std::array<MPolyQ, 3>, 3> hess;
  for (int i = 0; i < 3; ++i) {
    grad[i] = f.form.partial_derivative(i);
    for (int j = 0; j < 3; ++j) hess[i][j] = grad[i].partial_derivative(j);
  }

  if (auto q = rational_point(pts[0], grad)) {
    std::array<std::array<Rational, 3>, 3> H;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) H[i][j] = hess[i][j].eval(*q);
    int rank = rank3(H);
    if (rank == 2) return kNodal;
    if (rank != 1) return kInconclusive;  // rank 0 is a cone, handled above
    // rank 1: H = c v v^T, the tangent double line is v . x
    for (int i = 0; i < 3; ++i) {
      std::vector<Rational> v{H[i][0], H[i][1], H[i][2]};
      if (all_zero(v)) continue;
      MPolyQ lt = linear_form(v);
      if (!divides_linear(f.form, lt)) return kCuspidal;
      // a dividing tangent line contradicts the failed factor search but
      // still decides exactly
      return classify_line_times_quadric(lt, quotient_by_linear(f.form, lt));
    }
    return kInconclusive;
  }

  // No rational certificate (huge denominators): numeric Hessian rank with an
  // ambiguity band around the tolerance.
  Eigen::Matrix3cd H;
  double hscale = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      MPolyC hc = to_complex_poly(hess[i][j]);
      H(i, j) = hc.eval(pts[0]);
      hscale = std::max(hscale, hc.max_abs_coeff());
    }
  if (hscale == 0.0) return kInconclusive;
  Eigen::JacobiSVD<Eigen::Matrix3cd> svd(H);
  const double lo = cfg.svd_rank_rel_tol * 1e-2, hi = cfg.svd_rank_rel_tol * 1e2;
  int rank = 0;
  for (int i = 0; i < 3; ++i) {
    double ratio = svd.singularValues()(i) / hscale;
    if (ratio > lo && ratio < hi) return kInconclusive;  // boundary rank
    if (ratio >= hi) ++rank;
  }
  if (rank == 2) return kNodal;
  if (rank != 1) return kInconclusive;  // exact cone test already said no
  // rank 1 without a rational line: a conic+tangent would have one, so the
  // only consistent reading is a cusp; confirm the tangent line does not
  // divide f numerically before committing.
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (H.row(i).norm() > H.row(best).norm()) best = i;
  std::array<Complex, 3> v{H(best, 0), H(best, 1), H(best, 2)};
  int pivot = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(v[i]) > std::abs(v[pivot])) pivot = i;
  auto [A, B] = plane_basis(v, pivot);
  MPolyC fc = to_complex_poly(f.form);
  double rmax = restrict_to_line(fc, A, B).max_abs_coeff();
  if (rmax >= 1e-4 * fc.max_abs_coeff()) return kCuspidal;
  return kInconclusive;
}

bool tangent_cone_contains_cubic(const OrbitDescriptor& orb, const SymFormQ& g) {
  if (g.n != 2 || g.d != 3)
    throw std::invalid_argument("tangent_cone_contains_cubic: ternary cubics only");
  for (const auto& comp : orb.tangent_cone) {
    if (comp.anchor.size() != 3)
      throw std::invalid_argument("tangent_cone_contains_cubic: bad anchor");
    if (comp.kind == TangentConeKind::hyperplane_at_point) {
      if (is_zero(g.form.eval(comp.anchor))) return true;
    } else {
      MPolyQ r = restrict_to_plane(g.form, linear_form(comp.anchor));
      if (r.is_zero_poly()) return true;
      // classical discriminant of the binary cubic a s^3 + b s^2 t + c s t^2 + d t^3
      Rational a = r.coeff(Exp{3, 0}), b = r.coeff(Exp{2, 1});
      Rational c = r.coeff(Exp{1, 2}), d = r.coeff(Exp{0, 3});
      Rational disc = Rational(18) * a * b * c * d - Rational(4) * b * b * b * d + b * b * c * c -
                      Rational(4) * a * c * c * c - Rational(27) * a * a * d * d;
      if (is_zero(disc)) return true;
    }
  }
  return false;
}

SymFormQ random_cubic_in_tangent_cone(const OrbitDescriptor& orb, Rng& rng) {
  if (orb.tangent_cone.empty())
    throw std::invalid_argument("random_cubic_in_tangent_cone: no components");
  const auto& comp = orb.tangent_cone[rng.int_in(0, static_cast<long>(orb.tangent_cone.size()) - 1)];
  if (comp.kind == TangentConeKind::hyperplane_at_point) {
    MPolyQ g = random_symform(rng, 2, 3, 20).form;
    int k = 0;
    while (k < 3 && is_zero(comp.anchor[k])) ++k;
    if (k == 3) throw std::invalid_argument("random_cubic_in_tangent_cone: zero anchor");
    Exp cube{0, 0, 0};
    cube[k] = 3;
    Rational pk = comp.anchor[k];
    g.add_term(cube, -g.eval(comp.anchor) / (pk * pk * pk));
    return SymFormQ(2, 3, g);
  }
  // cone over x0: g|_{x0=0} drawn from the orbit's normalized singular
  // binary cubics, plus x0 times a random quadric
  if (!(comp.anchor == std::vector<Rational>{Rational(1), Rational(0), Rational(0)}))
    throw std::logic_error("random_cubic_in_tangent_cone: cone anchor must be x0");
  std::vector<MPolyQ> normal_forms;
  if (orb.label == kTripleLine) {
    normal_forms = {mono(0, 3, 0, 1), mono(0, 2, 1, 1)};
  } else {
    normal_forms = {mono(0, 3, 0, 1), mono(0, 0, 3, 1), mono(0, 1, 2, 1) + mono(0, 0, 3, 1),
                    mono(0, 2, 1, 1), mono(0, 1, 2, 1)};
  }
  MPolyQ g = normal_forms[rng.int_in(0, static_cast<long>(normal_forms.size()) - 1)];
  g = g + mono(1, 0, 0, 1) * random_symform(rng, 2, 2, 20).form;
  return SymFormQ(2, 3, g);
}

HurwitzReport hurwitz_sample_cubic(const OrbitDescriptor& orb, int trials, bool constrained,
                                   Rng& rng, const RunConfig& cfg) {
  if (trials <= 0) throw std::invalid_argument("hurwitz_sample_cubic: need trials >= 1");
  require_cubic(orb.representative, "hurwitz_sample_cubic");
  HurwitzReport rep;
  rep.n = 2;
  rep.d = 3;
  rep.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    SymFormQ g(2, 3, MPolyQ(3));
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 64) throw std::runtime_error("hurwitz_sample_cubic: sampler stalled");
      g = constrained ? random_cubic_in_tangent_cone(orb, rng) : random_symform(rng, 2, 3, 20);
      if (g.form.is_zero_poly() || proportional(orb.representative.form, g.form)) continue;
      if (is_zero(discriminant(g, cfg))) continue;
      if (!constrained && tangent_cone_contains_cubic(orb, g)) continue;  // keep generic draws generic
      break;
    }
    auto ord = line_order(orb.representative, g, cfg);
    if (!ord) {
      rep.contained_count += 1;
      continue;
    }
    rep.histogram[*ord] += 1;
    rep.max_order = std::max(rep.max_order, *ord);
  }
  return rep;
}

}  // namespace tenspec
