#include "tenspec/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "tenspec/disc_geometry.hpp"
#include "tenspec/matrix_det.hpp"
#include "tenspec/rng.hpp"
#include "tenspec/roots.hpp"

namespace tenspec {

namespace {

using MPolyC = MPoly<Complex>;
using Frame = std::vector<std::vector<Complex>>;

double maxabs(const UPolyC& p) {
  double m = 0.0;
  for (const Complex& c : p.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

// Coefficients at or below tol * maxabs become exact zeros, so degree()
// reflects the numerically supported degree.
UPolyC truncate_small(const UPolyC& p, double tol) {
  double cut = tol * maxabs(p);
  std::vector<Complex> c = p.coeffs();
  for (Complex& v : c)
    if (std::abs(v) <= cut) v = Complex(0.0, 0.0);
  return UPolyC(std::move(c));
}

UPolyC unit_scale(const UPolyC& p) {
  double m = maxabs(p);
  if (m == 0.0) return p;
  return p * Complex(1.0 / m, 0.0);
}

// Euclidean cascade with relative truncation: a remainder below tol (on
// unit-scaled operands) ends the descent and the current divisor is the gcd.
UPolyC numeric_gcd(UPolyC a, UPolyC b, double tol) {
  a = unit_scale(truncate_small(a, tol));
  b = unit_scale(truncate_small(b, tol));
  if (a.degree() < b.degree()) std::swap(a, b);
  while (b.degree() > 0) {
    UPolyC r = a.divrem(b).second;
    if (maxabs(r) <= tol) return b;
    a = b;
    b = unit_scale(truncate_small(r, tol));
  }
  return b.is_zero_poly() ? a : UPolyC::constant(Complex(1.0, 0.0));
}

// Backward-error scale of evaluating p at |x|.
double eval_scale(const UPolyC& p, double x) {
  double s = 1.0, pw = 1.0;
  for (const Complex& c : p.coeffs()) {
    s += std::abs(c) * pw;
    pw *= x;
  }
  return s;
}

bool near_real(const Complex& z, double tol) {
  return std::abs(z.imag()) <= tol * (1.0 + std::abs(z.real()));
}

std::vector<Eigenvalue> eigenvalues_from_chi(const UPolyQ& chi, int expected, const RunConfig& cfg) {
  std::vector<Eigenvalue> out;
  for (const auto& part : square_free_decomposition(chi)) {
    UPolyQ rem = part.factor;
    for (const auto& cl : univariate_roots(to_complex_poly(rem), cfg)) {
      if (!near_real(cl.value, cfg.root_cluster_radius)) continue;
      auto cand = reconstruct_rational(cl.value.real());
      if (!cand || !is_zero(rem.eval(*cand))) continue;
      rem = rem.divrem(UPolyQ(std::vector<Rational>{-*cand, Rational(1)})).first;
      Eigenvalue ev;
      ev.value = to_complex(*cand);
      ev.multiplicity = part.multiplicity;
      ev.exact = *cand;
      out.push_back(ev);
    }
    if (rem.degree() > 0) {
      for (const auto& cl : univariate_roots(to_complex_poly(rem), cfg)) {
        Eigenvalue ev;
        ev.value = cl.value;
        ev.multiplicity = part.multiplicity * cl.multiplicity;
        out.push_back(ev);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Eigenvalue& a, const Eigenvalue& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  int total = 0;
  for (const auto& ev : out) total += ev.multiplicity;
  if (total != expected) throw std::logic_error("eigenvalues: multiplicities do not sum to D(n, d)");
  return out;
}

bool point_less(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
    if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
  }
  return false;
}

void dedup_and_sort(std::vector<std::vector<Complex>>& pts, double tol) {
  std::vector<std::vector<Complex>> keep;
  for (auto& p : pts) {
    bool dup = false;
    for (const auto& q : keep)
      if (projective_distance(p, q) < tol) {
        dup = true;
        break;
      }
    if (!dup) keep.push_back(std::move(p));
  }
  std::sort(keep.begin(), keep.end(), point_less);
  pts = std::move(keep);
}

// Same dedup, keeping the per-point refined eigenvalue aligned with its point.
void dedup_sort_pairs(std::vector<std::vector<Complex>>& pts, std::vector<Complex>& lams,
                      double tol) {
  std::vector<std::pair<std::vector<Complex>, Complex>> keep;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool dup = false;
    for (const auto& q : keep)
      if (projective_distance(pts[i], q.first) < tol) {
        dup = true;
        break;
      }
    if (!dup) keep.emplace_back(std::move(pts[i]), lams[i]);
  }
  std::sort(keep.begin(), keep.end(),
            [](const auto& a, const auto& b) { return point_less(a.first, b.first); });
  pts.clear();
  lams.clear();
  for (auto& kp : keep) {
    pts.push_back(std::move(kp.first));
    lams.push_back(kp.second);
  }
}

// --- n = 1 -------------------------------------------------------------

EigenvectorSet binary_vectors_exact(const PSTensorQ& T, const PSTensorQ& t, const Rational& l0,
                                    const RunConfig& cfg) {
  const int e = T.d - 1;
  MPolyQ g0 = T.components[0] - t.components[0] * l0;
  MPolyQ g1 = T.components[1] - t.components[1] * l0;
  EigenvectorSet out;
  if (g0.is_zero_poly() && g1.is_zero_poly()) {
    out.infinite = true;
    return out;
  }
  UPolyQ common;
  int e_inf = 0;
  if (g0.is_zero_poly() || g1.is_zero_poly()) {
    const MPolyQ& g = g0.is_zero_poly() ? g1 : g0;
    common = UPolyQ(binary_coeffs(g, e));
    e_inf = e - common.degree();
  } else {
    UPolyQ p0(binary_coeffs(g0, e));
    UPolyQ p1(binary_coeffs(g1, e));
    common = gcd(p0, p1);
    e_inf = std::min(e - p0.degree(), e - p1.degree());
  }
  if (common.degree() > 0) {
    UPolyQ rem = common.divrem(gcd(common, common.derivative())).first;  // square-free part
    for (const auto& cl : univariate_roots(to_complex_poly(rem), cfg)) {
      if (!near_real(cl.value, cfg.root_cluster_radius)) continue;
      auto cand = reconstruct_rational(cl.value.real());
      if (!cand || !is_zero(rem.eval(*cand))) continue;
      rem = rem.divrem(UPolyQ(std::vector<Rational>{-*cand, Rational(1)})).first;
      out.points.push_back(normalize_projective({to_complex(*cand), Complex(1.0, 0.0)}));
    }
    if (rem.degree() > 0)
      for (const auto& cl : univariate_roots(to_complex_poly(rem), cfg))
        out.points.push_back(normalize_projective({cl.value, Complex(1.0, 0.0)}));
  }
  if (e_inf >= 1)
    out.points.push_back({Complex(1.0, 0.0), Complex(0.0, 0.0)});
  // res(T - l0 t) = 0 guarantees a projective common zero for an exact root
  if (out.points.empty())
    throw std::logic_error("eigenvectors_for: exact eigenvalue lost its common zero");
  out.lambda_refined.assign(out.points.size(), to_complex(l0));
  dedup_sort_pairs(out.points, out.lambda_refined, cfg.projective_dedup_tol);
  return out;
}

// Dehomogenized components of T and t in one affine chart: chart == 1 keeps
// x1 = 1 (variable x0), chart == 0 keeps x0 = 1 (variable x1).
struct ChartPolys {
  std::array<UPolyC, 2> Tq, tq, Tqd, tqd;
};

ChartPolys chart_polys(const PSTensorQ& T, const PSTensorQ& t, int chart) {
  const int e = T.d - 1;
  ChartPolys cp;
  for (int i = 0; i < 2; ++i) {
    std::vector<Complex> a = binary_coeffs(to_complex_poly(T.components[i]), e);
    std::vector<Complex> b = binary_coeffs(to_complex_poly(t.components[i]), e);
    if (chart == 0) {
      std::reverse(a.begin(), a.end());
      std::reverse(b.begin(), b.end());
    }
    cp.Tq[i] = UPolyC(std::move(a));
    cp.tq[i] = UPolyC(std::move(b));
    cp.Tqd[i] = cp.Tq[i].derivative();
    cp.tqd[i] = cp.tq[i].derivative();
  }
  return cp;
}

struct JointPolish {
  Complex z, lambda;
};

// Newton on the square system F_i(z, lambda) = Tq_i(z) - lambda tq_i(z).
// Polishing the eigenvalue together with the point matters: a root of the
// double-precision characteristic polynomial can sit ~1e-7 off the true
// eigenvalue, which leaves the two components without a common zero at the
// residual tolerance.
JointPolish polish_binary_joint(const ChartPolys& cp, Complex z, Complex lam) {
  auto fval = [&](Complex zz, Complex ll, Complex& f0, Complex& f1) {
    f0 = cp.Tq[0].eval(zz) - ll * cp.tq[0].eval(zz);
    f1 = cp.Tq[1].eval(zz) - ll * cp.tq[1].eval(zz);
  };
  Complex f0, f1;
  fval(z, lam, f0, f1);
  double best = std::hypot(std::abs(f0), std::abs(f1));
  for (int it = 0; it < 8 && best > 1e-300; ++it) {
    Complex a = cp.Tqd[0].eval(z) - lam * cp.tqd[0].eval(z);
    Complex b = -cp.tq[0].eval(z);
    Complex c = cp.Tqd[1].eval(z) - lam * cp.tqd[1].eval(z);
    Complex d = -cp.tq[1].eval(z);
    Complex det = a * d - b * c;
    if (std::abs(det) < 1e-300) break;
    Complex z2 = z - (d * f0 - b * f1) / det;
    Complex l2 = lam - (a * f1 - c * f0) / det;
    Complex g0, g1;
    fval(z2, l2, g0, g1);
    double r2 = std::hypot(std::abs(g0), std::abs(g1));
    if (r2 < best) {
      z = z2;
      lam = l2;
      best = r2;
      f0 = g0;
      f1 = g1;
    } else {
      break;
    }
  }
  return {z, lam};
}

EigenvectorSet binary_vectors_numeric(const PSTensorQ& T, const PSTensorQ& t, const Complex& l0,
                                      const RunConfig& cfg) {
  const int e = T.d - 1;
  const double tol = cfg.numeric_gcd_tol;
  EigenvectorSet out;
  std::array<std::optional<UPolyC>, 2> q;
  for (int i = 0; i < 2; ++i) {
    MPolyC g = to_complex_poly(T.components[i]) - to_complex_poly(t.components[i]) * l0;
    double sc = T.components[i].max_abs_coeff() + std::abs(l0) * t.components[i].max_abs_coeff();
    std::vector<Complex> c = binary_coeffs(g, e);
    for (Complex& v : c)
      if (std::abs(v) <= tol * (sc + 1.0)) v = Complex(0.0, 0.0);
    UPolyC p(std::move(c));
    if (!p.is_zero_poly()) q[i] = std::move(p);
  }
  if (!q[0] && !q[1]) {
    out.infinite = true;
    return out;
  }
  // chart-1 candidates: roots of the numeric gcd when the cascade finds one,
  // otherwise every root of the smaller surviving component; the joint polish
  // plus the residual filter separate true common zeros from the rest
  UPolyC source;
  if (!q[0] || !q[1])
    source = q[0] ? *q[0] : *q[1];
  else {
    source = numeric_gcd(*q[0], *q[1], tol);
    if (source.degree() < 1) source = (q[0]->degree() <= q[1]->degree()) ? *q[0] : *q[1];
  }
  std::vector<Complex> cand;
  if (source.degree() > 0)
    for (const auto& cl : univariate_roots(source, cfg)) cand.push_back(cl.value);

  ChartPolys cp1 = chart_polys(T, t, 1);
  ChartPolys cp0 = chart_polys(T, t, 0);
  // lambda may move only by its own error margin; a larger jump means the
  // polish slid to a different eigenvalue's zero
  const double drift = 1e-4 * (1.0 + std::abs(l0));
  auto try_candidate = [&](int chart, Complex z) {
    const ChartPolys& cp = (chart == 1) ? cp1 : cp0;
    JointPolish jp = polish_binary_joint(cp, z, l0);
    if (std::abs(jp.lambda - l0) > drift) return;
    double az = std::abs(jp.z);
    for (int i = 0; i < 2; ++i) {
      double sc = eval_scale(cp.Tq[i], az) + std::abs(jp.lambda) * eval_scale(cp.tq[i], az);
      if (std::abs(cp.Tq[i].eval(jp.z) - jp.lambda * cp.tq[i].eval(jp.z)) >
          cfg.eigen_residual_tol * sc)
        return;
    }
    out.points.push_back(chart == 1 ? normalize_projective({jp.z, Complex(1.0, 0.0)})
                                    : normalize_projective({Complex(1.0, 0.0), jp.z}));
    out.lambda_refined.push_back(jp.lambda);
  };
  for (Complex s : cand) {
    if (std::abs(s) <= 1.0)
      try_candidate(1, s);
    else
      try_candidate(0, Complex(1.0, 0.0) / s);
  }
  try_candidate(0, Complex(0.0, 0.0));  // the point at infinity
  if (out.points.empty())
    throw std::runtime_error("eigenvectors_for: no common zero survived the residual filter");
  dedup_sort_pairs(out.points, out.lambda_refined, cfg.projective_dedup_tol);
  return out;
}

// --- (n, d) = (2, 3) -----------------------------------------------------

struct X2Slices {
  MPolyC a0, a1, a2;  // g = a2 x2^2 + a1 x2 + a0 with x2-free slices
};

X2Slices slice_x2(const MPolyC& g) {
  X2Slices s{MPolyC::zero(3), MPolyC::zero(3), MPolyC::zero(3)};
  for (const auto& [e, c] : g.terms()) {
    auto f = e;
    f[2] = 0;
    if (e[2] == 0)
      s.a0.add_term(f, c);
    else if (e[2] == 1)
      s.a1.add_term(f, c);
    else if (e[2] == 2)
      s.a2.add_term(f, c);
    else
      throw std::invalid_argument("slice_x2: not a quadric");
  }
  return s;
}

// Res_{x2} of two quadrics as the ascending coefficient vector of the binary
// quartic eliminant R(s, 1), index = x0 exponent.
std::vector<Complex> eliminate_x2(const MPolyC& g, const MPolyC& h) {
  X2Slices G = slice_x2(g), H = slice_x2(h);
  auto m = sylvester_pair<MPolyC>({G.a0, G.a1, G.a2}, {H.a0, H.a1, H.a2}, MPolyC::zero(3));
  MPolyC R = det_cofactor(m);
  std::vector<Complex> out(5, Complex(0.0, 0.0));
  for (const auto& [e, c] : R.terms()) out.at(e[0]) += c;
  return out;
}

Frame random_frame(Rng& rng) {
  for (;;) {
    Frame m(3, std::vector<Complex>(3));
    for (auto& row : m)
      for (auto& v : row) v = Complex(static_cast<double>(rng.int_in(-3, 3)), 0.0);
    Complex det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                  m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                  m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (std::abs(det) >= 1.0) return m;
  }
}

std::vector<Complex> apply_frame(const Frame& m, const std::vector<Complex>& y) {
  std::vector<Complex> w(3, Complex(0.0, 0.0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) w[i] += m[i][j] * y[j];
  return w;
}

// Restriction of g to the line {(s al : s be : gamma)}, as a polynomial in
// gamma at s = 1. (al, be) is expected unit-scale.
UPolyC restrict_line(const MPolyC& g, const Complex& al, const Complex& be, double tol) {
  X2Slices s = slice_x2(g);
  std::vector<Complex> pt{al, be, Complex(0.0, 0.0)};
  std::vector<Complex> c{s.a0.eval<Complex>(pt), s.a1.eval<Complex>(pt), s.a2.eval<Complex>(pt)};
  double cut = tol * (g.max_abs_coeff() + 1.0);
  for (Complex& v : c)
    if (std::abs(v) <= cut) v = Complex(0.0, 0.0);
  return UPolyC(std::move(c));
}

// One elimination pass: drop x2 out of (pair0, pair1) in the given frame and
// collect candidate points (original coordinates) along each root line of the
// eliminant. Returns false when the eliminant degenerates to zero, leaving
// the caller to pick a new frame or a new pair.
bool elimination_attempt(const std::array<MPolyC, 3>& q, const MPolyC& pair0, const MPolyC& pair1,
                         const Frame* frame, double tol, std::vector<std::vector<Complex>>& cand,
                         bool& line_in_zero_set, const RunConfig& cfg) {
  MPolyC p0 = frame ? pair0.linear_change(*frame) : pair0;
  MPolyC p1 = frame ? pair1.linear_change(*frame) : pair1;
  std::array<MPolyC, 3> tq;
  for (int i = 0; i < 3; ++i) tq[i] = frame ? q[i].linear_change(*frame) : q[i];
  double m0 = p0.max_abs_coeff(), m1 = p1.max_abs_coeff();
  if (slice_x2(p0).a2.max_abs_coeff() <= tol * (m0 + 1.0) &&
      slice_x2(p1).a2.max_abs_coeff() <= tol * (m1 + 1.0))
    return false;  // x2 leads neither quadric in this frame
  std::vector<Complex> rc = eliminate_x2(p0, p1);
  double mr = 0.0;
  for (const Complex& v : rc) mr = std::max(mr, std::abs(v));
  if (mr <= tol * 24.0 * (m0 + 1.0) * (m0 + 1.0) * (m1 + 1.0) * (m1 + 1.0))
    return false;  // the pair shares a component over every base point
  for (Complex& v : rc)
    if (std::abs(v) <= tol * mr) v = Complex(0.0, 0.0);
  UPolyC r(std::move(rc));
  std::vector<std::array<Complex, 2>> lines;
  for (const auto& cl : univariate_roots(r, cfg)) {
    double nn = std::sqrt(1.0 + std::norm(cl.value));
    lines.push_back({cl.value / nn, Complex(1.0, 0.0) / nn});
  }
  if (r.degree() < 4) lines.push_back({Complex(1.0, 0.0), Complex(0.0, 0.0)});
  for (const auto& ln : lines) {
    std::array<UPolyC, 3> h;
    int best = -1;
    for (int i = 0; i < 3; ++i) {
      h[i] = restrict_line(tq[i], ln[0], ln[1], tol);
      if (!h[i].is_zero_poly() && (best < 0 || maxabs(h[i]) > maxabs(h[best]))) best = i;
    }
    if (best < 0) {
      line_in_zero_set = true;  // the whole line solves the triple
      continue;
    }
    if (h[best].degree() < 1) continue;
    for (const auto& cl : univariate_roots(h[best], cfg)) {
      std::vector<Complex> y{ln[0], ln[1], cl.value};
      cand.push_back(frame ? apply_frame(*frame, y) : y);
    }
  }
  return true;
}

// Gauss-Newton on the three quadrics in the affine chart of the largest
// coordinate; keeps the iterate only while the residual improves.
std::vector<Complex> polish_quadric_point(const std::array<MPolyC, 3>& q, std::vector<Complex> w,
                                          const RunConfig& cfg) {
  double scale = 1.0;
  for (const auto& g : q) scale = std::max(scale, g.max_abs_coeff() + 1.0);
  auto resid = [&q](const std::vector<Complex>& v) {
    double s = 0.0;
    for (const auto& g : q) s += std::norm(g.eval<Complex>(v));
    return std::sqrt(s);
  };
  double best = resid(w);
  for (int iter = 0; iter < 5 && best > cfg.polish_residual_tol * scale; ++iter) {
    int k = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(w[i]) > std::abs(w[k])) k = i;
    std::array<int, 2> free_idx{};
    int c = 0;
    for (int i = 0; i < 3; ++i)
      if (i != k) free_idx[c++] = i;
    Eigen::Matrix<Complex, 3, 2> J;
    Eigen::Matrix<Complex, 3, 1> rhs;
    for (int i = 0; i < 3; ++i) {
      rhs(i) = -q[i].eval<Complex>(w);
      for (int j = 0; j < 2; ++j)
        J(i, j) = q[i].partial_derivative(free_idx[j]).eval<Complex>(w);
    }
    Eigen::Matrix<Complex, 2, 1> delta = J.colPivHouseholderQr().solve(rhs);
    std::vector<Complex> w2 = w;
    w2[free_idx[0]] += delta(0);
    w2[free_idx[1]] += delta(1);
    double nn = 0.0;
    for (const Complex& v : w2) nn += std::norm(v);
    nn = std::sqrt(nn);
    for (Complex& v : w2) v /= nn;
    double r2 = resid(w2);
    if (r2 < best) {
      w = std::move(w2);
      best = r2;
    } else {
      break;
    }
  }
  return w;
}

struct TernaryPolish {
  std::vector<Complex> w;
  Complex lambda;
};

// Square Newton system: three quadric equations T_i(w) - lambda t_i(w) in the
// two free coordinates of the chart of the largest coordinate plus lambda.
TernaryPolish polish_ternary_joint(const std::array<MPolyC, 3>& Tc, const std::array<MPolyC, 3>& tc,
                                   std::vector<Complex> w, Complex lam) {
  std::array<std::array<MPolyC, 3>, 3> dT, dt;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      dT[i][j] = Tc[i].partial_derivative(j);
      dt[i][j] = tc[i].partial_derivative(j);
    }
  auto fnorm = [&](const std::vector<Complex>& v, Complex ll) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) s += std::norm(Tc[i].eval<Complex>(v) - ll * tc[i].eval<Complex>(v));
    return std::sqrt(s);
  };
  double best = fnorm(w, lam);
  for (int it = 0; it < 8 && best > 1e-300; ++it) {
    int k = 0;
    for (int i = 1; i < 3; ++i)
      if (std::abs(w[i]) > std::abs(w[k])) k = i;
    std::array<int, 2> fr{};
    int c = 0;
    for (int i = 0; i < 3; ++i)
      if (i != k) fr[c++] = i;
    Eigen::Matrix<Complex, 3, 3> J;
    Eigen::Matrix<Complex, 3, 1> rhs;
    for (int i = 0; i < 3; ++i) {
      rhs(i) = -(Tc[i].eval<Complex>(w) - lam * tc[i].eval<Complex>(w));
      for (int j = 0; j < 2; ++j)
        J(i, j) = dT[i][fr[j]].eval<Complex>(w) - lam * dt[i][fr[j]].eval<Complex>(w);
      J(i, 2) = -tc[i].eval<Complex>(w);
    }
    Eigen::Matrix<Complex, 3, 1> delta = J.partialPivLu().solve(rhs);
    std::vector<Complex> w2 = w;
    w2[fr[0]] += delta(0);
    w2[fr[1]] += delta(1);
    Complex l2 = lam + delta(2);
    double nn = 0.0;
    for (const Complex& v : w2) nn += std::norm(v);
    nn = std::sqrt(nn);
    if (!(nn > 0.0) || !std::isfinite(nn)) break;
    for (Complex& v : w2) v /= nn;
    double r2 = fnorm(w2, l2);
    if (r2 < best) {
      w = std::move(w2);
      lam = l2;
      best = r2;
    } else {
      break;
    }
  }
  return {std::move(w), lam};
}

EigenvectorSet ternary_cubic_vectors(const PSTensorQ& T, const PSTensorQ& t,
                                     const std::optional<Rational>& exact, const Complex& l0,
                                     const RunConfig& cfg) {
  std::array<MPolyC, 3> Tc, tc, g;
  for (int i = 0; i < 3; ++i) {
    Tc[i] = to_complex_poly(T.components[i]);
    tc[i] = to_complex_poly(t.components[i]);
    g[i] = Tc[i] - tc[i] * l0;
  }
  // with an inexact lambda0 the quadrics only nearly share their zeros, so
  // harvest candidates loosely and let the joint polish restore full accuracy
  RunConfig harvest = cfg;
  if (!exact) harvest.eigen_residual_tol = std::max(cfg.eigen_residual_tol, 1e-4);
  QuadricZeros z = isolated_common_zeros_quadrics(g[0], g[1], g[2], harvest);
  EigenvectorSet out;
  out.infinite = z.curve;
  if (exact) {
    out.points = std::move(z.points);
    out.lambda_refined.assign(out.points.size(), l0);
  } else {
    const double drift = 1e-4 * (1.0 + std::abs(l0));
    for (auto& w0 : z.points) {
      TernaryPolish tp = polish_ternary_joint(Tc, tc, std::move(w0), l0);
      if (std::abs(tp.lambda - l0) > drift) continue;
      bool keep = true;
      for (int i = 0; i < 3 && keep; ++i) {
        double sc =
            1.0 + Tc[i].max_abs_coeff() + std::abs(tp.lambda) * tc[i].max_abs_coeff();
        if (std::abs(Tc[i].eval<Complex>(tp.w) - tp.lambda * tc[i].eval<Complex>(tp.w)) >
            cfg.eigen_residual_tol * sc)
          keep = false;
      }
      if (!keep) continue;
      out.points.push_back(normalize_projective(std::move(tp.w)));
      out.lambda_refined.push_back(tp.lambda);
    }
    dedup_sort_pairs(out.points, out.lambda_refined, cfg.projective_dedup_tol);
  }
  if (!out.infinite && out.points.empty())
    throw std::runtime_error("eigenvectors_for: no common zero survived the residual filter");
  return out;
}

EigenvectorSet vectors_dispatch(const PSTensorQ& T, const PSTensorQ& t,
                                const std::optional<Rational>& exact, const Complex& lam,
                                const RunConfig& cfg) {
  if (T.n == 1)
    return exact ? binary_vectors_exact(T, t, *exact, cfg) : binary_vectors_numeric(T, t, lam, cfg);
  if (T.n == 2 && T.d == 3) return ternary_cubic_vectors(T, t, exact, lam, cfg);
  throw std::invalid_argument("eigenvectors_for: supported shapes are n = 1 and (n, d) = (2, 3)");
}

// Inverse of symmetric_to_ps via the Euler relation; rejects tensors outside
// the symmetric image.
SymFormQ symmetric_antiderivative(const PSTensorQ& T, const std::string& who) {
  MPolyQ f = MPolyQ::zero(T.n + 1);
  for (int i = 0; i <= T.n; ++i)
    f = f + T.components[i] * MPolyQ::variable(T.n + 1, i, Rational(1));
  SymFormQ g(T.n, T.d, std::move(f));
  if (!(symmetric_to_ps(g) == T)) throw std::invalid_argument(who + ": tensor is not symmetric");
  return g;
}

}  // namespace

std::vector<Complex> normalize_projective(std::vector<Complex> v) {
  double nn = 0.0;
  for (const Complex& c : v) nn += std::norm(c);
  nn = std::sqrt(nn);
  if (nn == 0.0) throw std::invalid_argument("normalize_projective: zero vector");
  double mx = 0.0;
  for (Complex& c : v) {
    c /= nn;
    mx = std::max(mx, std::abs(c));
  }
  std::size_t k = 0;
  while (k + 1 < v.size() && std::abs(v[k]) <= 1e-9 * mx) ++k;
  Complex phase = v[k] / std::abs(v[k]);
  for (Complex& c : v) c /= phase;
  v[k] = Complex(std::abs(v[k]), 0.0);
  return v;
}

double projective_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("projective_distance: size mismatch");
  Complex ip(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) ip += a[i] * std::conj(b[i]);
  // the phase aligning b with a also minimizes the chordal distance; the
  // explicit difference avoids the cancellation in sqrt(2 - 2|ip|)
  Complex phase = (std::abs(ip) == 0.0) ? Complex(1.0, 0.0) : ip / std::abs(ip);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - phase * b[i]);
  return std::sqrt(s);
}

QuadricZeros isolated_common_zeros_quadrics(const MPoly<Complex>& q0, const MPoly<Complex>& q1,
                                            const MPoly<Complex>& q2, const RunConfig& cfg) {
  std::array<MPolyC, 3> q{q0, q1, q2};
  for (const auto& g : q) {
    if (g.nvars() != 3)
      throw std::invalid_argument("isolated_common_zeros_quadrics: three variables expected");
    if (!g.is_zero_poly() && (!g.is_homogeneous() || g.degree() != 2))
      throw std::invalid_argument("isolated_common_zeros_quadrics: quadrics expected");
  }
  const double tol = cfg.numeric_gcd_tol;
  QuadricZeros out;
  double mq = 0.0;
  for (const auto& g : q) mq = std::max(mq, g.max_abs_coeff());
  if (mq == 0.0) {
    out.curve = true;  // the zero system cuts nothing out
    return out;
  }

  Rng rng = Rng(cfg.seed).fork(0x51adc0de);
  std::vector<std::vector<Complex>> cand;
  bool line_in_zero_set = false;
  bool produced = false;

  // literal pair first, then fresh frames, then random combinations
  for (int attempt = 0; attempt < 3 && !produced; ++attempt) {
    std::optional<Frame> frame;
    if (attempt > 0) frame = random_frame(rng);
    produced = elimination_attempt(q, q[0], q[1], frame ? &*frame : nullptr, tol, cand,
                                   line_in_zero_set, cfg);
  }
  for (int draw = 0; draw < 2 && !produced; ++draw) {
    std::array<long, 3> A{}, B{};
    do {
      for (auto& v : A) v = rng.int_in(-5, 5);
      for (auto& v : B) v = rng.int_in(-5, 5);
    } while (A[0] * B[1] - A[1] * B[0] == 0 && A[0] * B[2] - A[2] * B[0] == 0 &&
             A[1] * B[2] - A[2] * B[1] == 0);
    MPolyC c0 = MPolyC::zero(3), c1 = MPolyC::zero(3);
    for (int i = 0; i < 3; ++i) {
      c0 = c0 + q[i] * Complex(static_cast<double>(A[i]), 0.0);
      c1 = c1 + q[i] * Complex(static_cast<double>(B[i]), 0.0);
    }
    for (int attempt = 0; attempt < 2 && !produced; ++attempt) {
      std::optional<Frame> frame;
      if (attempt > 0) frame = random_frame(rng);
      produced =
          elimination_attempt(q, c0, c1, frame ? &*frame : nullptr, tol, cand, line_in_zero_set, cfg);
    }
  }
  if (!produced) {
    out.curve = true;  // a shared component survived every pair and frame
    return out;
  }
  out.curve = line_in_zero_set;

  // the base point of the elimination is invisible to it
  cand.push_back({Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)});

  for (auto& y : cand) {
    std::vector<Complex> w = polish_quadric_point(q, normalize_projective(std::move(y)), cfg);
    bool ok = true;
    for (const auto& g : q)
      if (std::abs(g.eval<Complex>(w)) > cfg.eigen_residual_tol * (g.max_abs_coeff() + 1.0)) {
        ok = false;
        break;
      }
    if (ok) out.points.push_back(normalize_projective(std::move(w)));
  }
  dedup_and_sort(out.points, cfg.projective_dedup_tol);
  return out;
}

std::vector<Eigenvalue> eigenvalues(const PSTensorQ& T, const PSTensorQ& t, const RunConfig& cfg) {
  return eigenvalues_from_chi(char_poly(T, t, cfg), eigencount(T.n, T.d), cfg);
}

std::vector<Eigenvalue> eigenvalues(const PSTensorQ& T, const RunConfig& cfg) {
  return eigenvalues(T, unit_tensor(T.n, T.d), cfg);
}

EigenvectorSet eigenvectors_for(const PSTensorQ& T, const PSTensorQ& t, const Rational& lambda0,
                                const RunConfig& cfg) {
  UPolyQ chi = char_poly(T, t, cfg);
  if (!is_zero(chi.eval(lambda0)))
    throw std::invalid_argument("eigenvectors_for: lambda0 is not an eigenvalue");
  return vectors_dispatch(T, t, lambda0, to_complex(lambda0), cfg);
}

EigenvectorSet eigenvectors_for(const PSTensorQ& T, const PSTensorQ& t, const Complex& lambda0,
                                const RunConfig& cfg) {
  UPolyC chi = to_complex_poly(char_poly(T, t, cfg));
  if (std::abs(chi.eval(lambda0)) > cfg.eigen_residual_tol * eval_scale(chi, std::abs(lambda0)))
    throw std::invalid_argument("eigenvectors_for: lambda0 is not an eigenvalue");
  return vectors_dispatch(T, t, std::nullopt, lambda0, cfg);
}

EigenschemeReport eigenscheme(const PSTensorQ& T, const PSTensorQ& t, const RunConfig& cfg) {
  const int D = eigencount(T.n, T.d);
  UPolyQ chi = char_poly(T, t, cfg);
  std::vector<Eigenvalue> evs = eigenvalues_from_chi(chi, D, cfg);
  EigenschemeReport rep;
  for (const auto& ev : evs) {
    EigenvectorSet set = vectors_dispatch(T, t, ev.exact, ev.value, cfg);
    if (set.infinite) {
      rep.infinite = true;
      continue;
    }
    for (std::size_t i = 0; i < set.points.size(); ++i) {
      EigenPair pr;
      pr.lambda = set.lambda_refined[i];
      pr.w = std::move(set.points[i]);
      pr.algebraic_multiplicity = ev.multiplicity;
      pr.residual = eigenpair_residual(T, t, pr.lambda, pr.w);
      rep.pairs.push_back(std::move(pr));
    }
  }
  bool simple = static_cast<int>(evs.size()) == D;
  bool distinct = static_cast<int>(rep.pairs.size()) == D;
  for (std::size_t i = 0; i < rep.pairs.size() && distinct; ++i)
    for (std::size_t j = i + 1; j < rep.pairs.size() && distinct; ++j)
      if (projective_distance(rep.pairs[i].w, rep.pairs[j].w) <= cfg.projective_dedup_tol)
        distinct = false;
  rep.reduced = !rep.infinite && simple && distinct;
  return rep;
}

EigenschemeReport eigenscheme(const PSTensorQ& T, const RunConfig& cfg) {
  return eigenscheme(T, unit_tensor(T.n, T.d), cfg);
}

double eigenpair_residual(const PSTensorQ& T, const PSTensorQ& t, const Complex& lambda,
                          const std::vector<Complex>& w) {
  std::vector<Complex> a = contract(T, w);
  std::vector<Complex> b = contract(t, w);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - lambda * b[i]);
  return std::sqrt(s);
}

std::pair<int, int> mult_lower_bound_check(const PSTensorQ& T, const PSTensorQ& t,
                                           const Rational& lambda0, const RunConfig& cfg) {
  if (T.n != 1) throw std::invalid_argument("mult_lower_bound_check: binary tensors only");
  if (T.n != t.n || T.d != t.d)
    throw std::invalid_argument("mult_lower_bound_check: shape mismatch");
  SymFormQ f = symmetric_antiderivative(T, "mult_lower_bound_check");
  SymFormQ tau = symmetric_antiderivative(t, "mult_lower_bound_check");
  UPolyQ chi = char_poly(T, t, cfg);
  UPolyQ lin(std::vector<Rational>{-lambda0, Rational(1)});
  int alg = 0;
  for (;;) {
    auto [quot, rem] = chi.divrem(lin);
    if (!rem.is_zero_poly()) break;
    ++alg;
    chi = quot;
  }
  if (alg == 0) throw std::invalid_argument("mult_lower_bound_check: lambda0 is not an eigenvalue");
  MPolyQ diff = f.form - tau.form * lambda0;
  if (diff.is_zero_poly())
    throw std::invalid_argument("mult_lower_bound_check: T - lambda0 t is the zero form");
  int hyp = mult_disc_binary(SymFormQ(1, T.d, std::move(diff)));
  if (alg < hyp)
    throw std::logic_error(
        "mult_lower_bound_check: algebraic multiplicity fell below the hypersurface multiplicity");
  return {alg, hyp};
}

}  // namespace tenspec
