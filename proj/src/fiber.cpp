#include "tenspec/fiber.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "tenspec/resultant.hpp"

namespace tenspec {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

// Bezout matrix of the binary pair (g0, g1) of common degree e, in the
// dehomogenized variable z = x0/x1: entry (r, s) is the coefficient of
// x^r y^s in (p(x)q(y) - p(y)q(x)) / (x - y). Its determinant equals the
// binary resultant up to a constant depending only on e, which cancels in
// the monic normalization below.
void build_bezout(const std::vector<Complex>& g0, const std::vector<Complex>& g1, int e,
                  MatrixXcd& B) {
  for (int r = 0; r < e; ++r)
    for (int s = 0; s < e; ++s) {
      int sig = r + s + 1;
      Complex acc(0);
      for (int k = std::max(0, sig - e); k <= std::min(r, s); ++k)
        acc += g0[k] * g1[sig - k] - g1[k] * g0[sig - k];
      B(r, s) = acc;
    }
}

// Coefficient map a -> (c_1, ..., c_D) of the monic characteristic polynomial
// res(T - lambda t) / res(t), evaluated by sampling the Bezout determinant at
// D+1 nodes on the circle of radius max(1, |a|_inf) and inverting the DFT.
// The radius only affects rounding: any D+1 distinct nodes interpolate the
// same polynomial, and scaling with the input keeps the relative error near
// eps. Monic normalization divides by the leading coefficient det Bez(t0,t1),
// so the Bezout-vs-Sylvester constant drops out.
class CharCoeffMap {
 public:
  CharCoeffMap(int d, bool symmetric, const PSTensorQ& t)
      : d_(d), e_(d - 1), D_(2 * (d - 1)), symmetric_(symmetric) {
    if (d < 3 || d > 6) throw std::invalid_argument("char map: supported degrees are 3..6");
    if (t.n != 1 || t.d != d) throw std::invalid_argument("char map: reference tensor shape mismatch");
    Rational rt = resultant_binary(t);
    if (is_zero(rt)) throw std::invalid_argument("char map: res(t) = 0");
    t0_ = binary_coeffs(to_complex_poly(t.components[0]), e_);
    t1_ = binary_coeffs(to_complex_poly(t.components[1]), e_);
    MatrixXcd Bt(e_, e_);
    build_bezout(t0_, t1_, e_, Bt);
    bez_t_ = Eigen::PartialPivLU<MatrixXcd>(Bt).determinant();
    int N = D_ + 1;
    twiddle_.resize(N);
    for (int m = 0; m < N; ++m) {
      double ang = 2.0 * M_PI * m / N;
      twiddle_[m] = Complex(std::cos(ang), std::sin(ang));
    }
  }

  int dim() const { return symmetric_ ? d_ + 1 : 2 * d_; }
  int deg() const { return D_; }

  // c[i-1] = c_i; when J != nullptr it is filled as D rows by dim columns,
  // the derivative rows obtained by adjugate-trace differentiation of the
  // sampled determinants (d det = det * tr(B^{-1} dB)).
  void eval(const std::vector<Complex>& a, std::vector<Complex>& c,
            std::vector<std::vector<Complex>>* J) const {
    if (static_cast<int>(a.size()) != dim()) throw std::invalid_argument("char map: bad arity");
    std::vector<Complex> f0(e_ + 1), f1(e_ + 1);
    components(a, f0, f1);
    double rho = 1.0;
    for (const Complex& v : a) rho = std::max(rho, std::abs(v));

    const int N = D_ + 1;
    std::vector<Complex> Rval(N);
    std::vector<std::vector<Complex>> dR;  // [node][unknown]
    if (J) dR.assign(N, std::vector<Complex>(dim()));
    switch (e_) {
      case 2: eval_nodes<2>(f0, f1, rho, Rval, J ? &dR : nullptr); break;
      case 3: eval_nodes<3>(f0, f1, rho, Rval, J ? &dR : nullptr); break;
      case 4: eval_nodes<4>(f0, f1, rho, Rval, J ? &dR : nullptr); break;
      default: eval_nodes<5>(f0, f1, rho, Rval, J ? &dR : nullptr); break;
    }

    std::vector<Complex> coeffs = inv_dft(Rval, rho);
    c.resize(D_);
    for (int i = 1; i <= D_; ++i) c[i - 1] = coeffs[D_ - i] / bez_t_;
    if (J) {
      J->assign(D_, std::vector<Complex>(dim()));
      std::vector<Complex> col(N);
      for (int m = 0; m < dim(); ++m) {
        for (int jn = 0; jn < N; ++jn) col[jn] = dR[jn][m];
        std::vector<Complex> dcoeffs = inv_dft(col, rho);
        for (int i = 1; i <= D_; ++i) (*J)[i - 1][m] = dcoeffs[D_ - i] / bez_t_;
      }
    }
  }

 private:
  int d_, e_, D_;
  bool symmetric_;
  std::vector<Complex> t0_, t1_, twiddle_;
  Complex bez_t_;

  // Fixed-size node loop: builds Bez(f - lambda t) at every node, records the
  // determinant, and for Jacobian requests accumulates the adjugate-trace
  // derivative with respect to each input coefficient. The Bezout entry
  // b_{rs} = sum_k (g0[k] g1[sig-k] - g1[k] g0[sig-k]), sig = r+s+1, over
  // max(0, sig-E) <= k <= min(r, s), gives
  //   d b_{rs} / d g0[m] = g1[sig-m] * (inR(m) - inR(sig-m)),
  //   d b_{rs} / d g1[m] = -g0[sig-m] * (inR(m) - inR(sig-m)).
  template <int E>
  void eval_nodes(const std::vector<Complex>& f0, const std::vector<Complex>& f1, double rho,
                  std::vector<Complex>& Rval, std::vector<std::vector<Complex>>* dR) const {
    using Mat = Eigen::Matrix<Complex, E, E>;
    Mat B, inv;
    Complex g0[E + 1], g1[E + 1];
    std::vector<Complex> df0(E + 1), df1(E + 1);
    const int N = D_ + 1;
    for (int jn = 0; jn < N; ++jn) {
      Complex lambda = rho * twiddle_[jn];
      for (int k = 0; k <= E; ++k) {
        g0[k] = f0[k] - lambda * t0_[k];
        g1[k] = f1[k] - lambda * t1_[k];
      }
      for (int r = 0; r < E; ++r)
        for (int s = 0; s < E; ++s) {
          int sig = r + s + 1;
          Complex acc(0);
          for (int k = std::max(0, sig - E); k <= std::min(r, s); ++k)
            acc += g0[k] * g1[sig - k] - g1[k] * g0[sig - k];
          B(r, s) = acc;
        }
      Eigen::PartialPivLU<Mat> lu(B);
      Complex det = lu.determinant();
      Rval[jn] = det;
      if (!dR) continue;
      inv = lu.inverse();
      for (int m = 0; m <= E; ++m) {
        Complex s0(0), s1(0);
        for (int r = 0; r < E; ++r)
          for (int s = 0; s < E; ++s) {
            int sig = r + s + 1, idx = sig - m;
            if (idx < 0 || idx > E) continue;
            int lo = std::max(0, sig - E), hi = std::min(r, s);
            int sgn = int(m >= lo && m <= hi) - int(idx >= lo && idx <= hi);
            if (sgn == 0) continue;
            Complex w = double(sgn) * inv(s, r);
            s0 += w * g1[idx];
            s1 -= w * g0[idx];
          }
        df0[m] = det * s0;
        df1[m] = det * s1;
      }
      chain(df0, df1, (*dR)[jn]);
    }
  }

  // Component coefficient vectors of the tensor encoded by a: the gradient
  // embedding for the symmetric map, plain concatenation otherwise.
  void components(const std::vector<Complex>& a, std::vector<Complex>& f0,
                  std::vector<Complex>& f1) const {
    if (symmetric_) {
      for (int m = 0; m <= e_; ++m) {
        f0[m] = double(m + 1) / d_ * a[m + 1];
        f1[m] = double(d_ - m) / d_ * a[m];
      }
    } else {
      for (int m = 0; m <= e_; ++m) {
        f0[m] = a[m];
        f1[m] = a[d_ + m];
      }
    }
  }

  void chain(const std::vector<Complex>& df0, const std::vector<Complex>& df1,
             std::vector<Complex>& out) const {
    if (symmetric_) {
      for (int q = 0; q <= d_; ++q) {
        Complex v(0);
        if (q >= 1) v += double(q) / d_ * df0[q - 1];
        if (q <= e_) v += double(d_ - q) / d_ * df1[q];
        out[q] = v;
      }
    } else {
      for (int m = 0; m <= e_; ++m) {
        out[m] = df0[m];
        out[d_ + m] = df1[m];
      }
    }
  }

  // Ascending coefficients of the degree-D polynomial with values v[j] at the
  // nodes rho * omega^j.
  std::vector<Complex> inv_dft(const std::vector<Complex>& v, double rho) const {
    const int N = D_ + 1;
    std::vector<Complex> out(N);
    double scale = 1.0;
    for (int k = 0; k < N; ++k) {
      Complex acc(0);
      for (int j = 0; j < N; ++j) acc += v[j] * std::conj(twiddle_[(j * k) % N]);
      out[k] = acc / (double(N) * scale);
      scale *= rho;
    }
    return out;
  }
};

// Start system x_i^{d_i} - r_i with |r_i| = 1.
struct StartSystem {
  std::vector<int> degrees;
  std::vector<Complex> rhs;

  void value(const VectorXcd& x, VectorXcd& out) const {
    for (int i = 0; i < static_cast<int>(degrees.size()); ++i)
      out(i) = std::pow(x(i), degrees[i]) - rhs[i];
  }
  void add_jacobian(const VectorXcd& x, const Complex& w, MatrixXcd& J) const {
    for (int i = 0; i < static_cast<int>(degrees.size()); ++i)
      J(i, i) += w * double(degrees[i]) * std::pow(x(i), degrees[i] - 1);
  }
};

// Evaluator concept used by the tracker: n(), value(x, out), jacobian(x, J).
template <class Sys>
PathSolution track_one(const Sys& F, const StartSystem& G, const Complex& gamma, VectorXcd x,
                       const RunConfig& cfg) {
  const int n = F.n();
  VectorXcd fx(n), gx(n), H(n), rhs(n), xp(n);
  MatrixXcd JH(n, n);

  auto eval_H = [&](const VectorXcd& z, double s, VectorXcd& out) {
    F.value(z, fx);
    G.value(z, gx);
    out = s * fx + (1.0 - s) * gamma * gx;
  };
  auto jac_H = [&](const VectorXcd& z, double s, MatrixXcd& J) {
    F.jacobian(z, J);
    J *= s;
    G.add_jacobian(z, (1.0 - s) * gamma, J);
  };

  PathSolution out;
  double s = 0.0, ds = cfg.track_max_step * 0.5;
  bool failed = false;
  int steps = 0, streak = 0;
  // norm history at accepted steps, for classifying truncated paths
  std::vector<std::pair<double, double>> hist;  // (1 - s, |x|)
  // a runaway grows by >= this factor while the remaining distance shrinks 10x
  auto growing = [&](double rem, double norm) {
    if (norm <= 30.0) return false;
    for (auto it = hist.rbegin(); it != hist.rend(); ++it)
      if (it->first >= 10.0 * rem) return norm > 1.2 * it->second;
    return false;
  };
  Eigen::PartialPivLU<MatrixXcd> pred_lu;
  VectorXcd pred_dir(n);
  bool pred_fresh = false;  // predictor data is for the current (x, s)
  while (s < 1.0 - 1e-12) {
    if (++steps > 4000) {
      if (std::getenv("TENSPEC_TRACE"))
        std::fprintf(stderr, "[cap] s=%.12f ds=%.3e |x|=%.3e\n", s, ds, x.norm());
      failed = true;
      break;
    }
    double h = std::min(ds, 1.0 - s);
    // Euler predictor: H_x dx/ds = -(F - gamma G); reused across halvings
    if (!pred_fresh) {
      jac_H(x, s, JH);
      F.value(x, fx);
      G.value(x, gx);
      rhs = fx - gamma * gx;
      pred_lu.compute(JH);
      pred_dir = pred_lu.solve(rhs);
      pred_fresh = true;
    }
    xp = x - h * pred_dir;
    double sp = s + h;
    // Newton corrector at fixed sp
    bool ok = false;
    int used = cfg.track_max_corrector_iters;
    if (xp.allFinite()) {
      for (int it = 1; it <= cfg.track_max_corrector_iters; ++it) {
        jac_H(xp, sp, JH);
        eval_H(xp, sp, H);
        if (!JH.allFinite() || !H.allFinite()) break;
        VectorXcd delta = Eigen::PartialPivLU<MatrixXcd>(JH).solve(-H);
        if (!delta.allFinite()) break;
        xp += delta;
        if (delta.norm() <= cfg.track_corrector_tol * (1.0 + xp.norm())) {
          ok = true;
          used = it;
          break;
        }
      }
    }
    if (!ok) {
      streak = 0;
      ds = h * 0.5;
      if (ds < cfg.track_min_step) {
        // crawling at the floor settles nothing for a runaway; call it now
        if (growing(1.0 - s, x.norm())) {
          out.diverged = true;
          return out;
        }
        // the floor binds the nominal step; inside the terminal sliver the
        // end clamp legitimately shrinks h below it, so crawl a little there
        if (1.0 - s > 1e-3 || ds < 1e-13) {
          if (std::getenv("TENSPEC_TRACE"))
            std::fprintf(stderr, "[stall] s=%.12f ds=%.3e |x|=%.3e steps=%d\n", s, ds, x.norm(),
                         steps);
          failed = true;
          break;
        }
      }
      continue;
    }
    x = xp;
    s = sp;
    pred_fresh = false;
    if (x.norm() > cfg.track_divergence_norm) {
      out.diverged = true;
      return out;
    }
    hist.emplace_back(1.0 - s, x.norm());
    // a one-iteration correction or a streak of easy steps earns a larger step
    if (used <= 1 || ++streak >= 3) {
      ds = std::min(ds * 2.0, cfg.track_max_step);
      streak = 0;
    }
  }

  if (failed && (!x.allFinite() || x.norm() > 1e6)) {
    out.diverged = true;
    return out;
  }
  const VectorXcd stall_x = x;
  const double stall_rem = 1.0 - s;

  // endgame: Newton polish on F itself, keeping the best residual seen.
  // Stalled endpoints take the same polish: the ones parked next to a finite
  // solution are rescued.
  auto resid = [&](const VectorXcd& z) {
    F.value(z, fx);
    return fx.allFinite() ? fx.lpNorm<Eigen::Infinity>() : std::numeric_limits<double>::infinity();
  };
  VectorXcd best = x;
  double best_r = resid(x);
  for (int it = 0; it < 40 && best_r >= cfg.polish_residual_tol; ++it) {
    F.jacobian(x, JH);
    F.value(x, fx);
    if (!JH.allFinite() || !fx.allFinite()) break;
    VectorXcd delta = Eigen::PartialPivLU<MatrixXcd>(JH).solve(-fx);
    if (!delta.allFinite()) break;
    x += delta;
    double r = resid(x);
    if (r < best_r) {
      best_r = r;
      best = x;
    } else if (r > 10.0 * best_r) {
      break;  // walked away from the basin
    }
  }
  if (best.norm() > cfg.track_divergence_norm) {
    out.diverged = true;
    return out;
  }
  out.coords.assign(best.data(), best.data() + n);
  out.residual = best_r;
  out.converged = best_r < 1e-8;  // PathSolution invariant

  if (!out.converged && failed) {
    // Affine tracking truncates a path running to infinity long before the
    // norm cap: a blowup ~ (1-s)^(-w) with small w reaches only ~1e2..1e5 by
    // the time the step floor bites. A truncated runaway is recognizable by
    // its tail: the norm keeps growing as the remaining distance shrinks,
    // while a stall next to a finite solution plateaus (and is normally
    // rescued by the polish above anyway).
    bool fled = !x.allFinite() || x.norm() > 1e6;
    if (fled || growing(stall_rem, stall_x.norm())) {
      out.coords.clear();
      out.diverged = true;
    }
  }
  return out;
}

template <class Sys>
std::vector<PathSolution> run_paths(const Sys& F, const std::vector<int>& degrees, Rng& rng,
                                    const RunConfig& cfg) {
  const int n = F.n();
  StartSystem G;
  G.degrees = degrees;
  std::vector<double> theta(n);
  for (int i = 0; i < n; ++i) {
    theta[i] = 2.0 * M_PI * rng.unit_double();
    G.rhs.push_back(Complex(std::cos(theta[i]), std::sin(theta[i])));
  }
  Complex gamma = rng.unit_complex();

  std::vector<PathSolution> out;
  std::vector<int> idx(n, 0);
  for (;;) {
    VectorXcd x(n);
    for (int i = 0; i < n; ++i) {
      double ang = (theta[i] + 2.0 * M_PI * idx[i]) / degrees[i];
      x(i) = Complex(std::cos(ang), std::sin(ang));
    }
    out.push_back(track_one(F, G, gamma, std::move(x), cfg));
    int p = 0;
    while (p < n && ++idx[p] == degrees[p]) idx[p++] = 0;
    if (p == n) break;
  }
  return out;
}

struct SquareSystemEval {
  const SquareSystem& S;
  std::vector<std::vector<MPolyC>> partials;
  std::vector<double> scale;

  explicit SquareSystemEval(const SquareSystem& sys) : S(sys) {
    for (std::size_t i = 0; i < S.equations.size(); ++i) {
      const auto& eq = S.equations[i];
      std::vector<MPolyC> row;
      for (int j = 0; j < S.nvars; ++j) row.push_back(eq.partial_derivative(j));
      partials.push_back(std::move(row));
      scale.push_back(std::max(1.0, eq.max_abs_coeff()));
    }
  }

  int n() const { return S.nvars; }
  void value(const VectorXcd& x, VectorXcd& out) const {
    std::vector<Complex> p(x.data(), x.data() + S.nvars);
    for (int i = 0; i < S.nvars; ++i) out(i) = S.equations[i].eval(p) / scale[i];
  }
  void jacobian(const VectorXcd& x, MatrixXcd& J) const {
    std::vector<Complex> p(x.data(), x.data() + S.nvars);
    for (int i = 0; i < S.nvars; ++i)
      for (int j = 0; j < S.nvars; ++j) J(i, j) = partials[i][j].eval(p) / scale[i];
  }
};

// Degree-triangular randomized square subsystem of the fiber equations:
// equation i (1-based) is sum_{j<=i} mix[i][j] (c_j - phi_j), which keeps the
// recorded degree at i and the subsystem variety intact for generic mixes.
struct FiberEval {
  const CharCoeffMap& map;
  const std::vector<Complex>& phi;
  std::vector<std::vector<Complex>> mix;  // row i has i+1 entries, diagonal 1
  std::vector<double> scale;
  int k;

  FiberEval(const CharCoeffMap& m, const std::vector<Complex>& targets, Rng& rng)
      : map(m), phi(targets), k(m.dim()) {
    for (int i = 0; i < k; ++i) {
      std::vector<Complex> row(i + 1);
      for (int j = 0; j < i; ++j) row[j] = rng.complex_in_disk(1.0);
      row[i] = Complex(1.0);
      mix.push_back(std::move(row));
      double sc = 1.0;
      for (int j = 0; j <= i; ++j) sc = std::max(sc, std::abs(phi[j]));
      scale.push_back(sc);
    }
  }

  int n() const { return k; }
  void value(const VectorXcd& x, VectorXcd& out) const {
    std::vector<Complex> a(x.data(), x.data() + k), c;
    map.eval(a, c, nullptr);
    for (int i = 0; i < k; ++i) {
      Complex acc(0);
      for (int j = 0; j <= i; ++j) acc += mix[i][j] * (c[j] - phi[j]);
      out(i) = acc / scale[i];
    }
  }
  void jacobian(const VectorXcd& x, MatrixXcd& J) const {
    std::vector<Complex> a(x.data(), x.data() + k), c;
    std::vector<std::vector<Complex>> Jc;
    map.eval(a, c, &Jc);
    for (int i = 0; i < k; ++i)
      for (int m = 0; m < k; ++m) {
        Complex acc(0);
        for (int j = 0; j <= i; ++j) acc += mix[i][j] * Jc[j][m];
        J(i, m) = acc / scale[i];
      }
  }
};

int rank_by_svd(const MatrixXcd& J, double rel_tol) {
  Eigen::JacobiSVD<MatrixXcd> svd(J);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) ++rank;
  return rank;
}

int jacobian_rank_impl(const std::vector<Complex>& base, int d, bool symmetric,
                       const PSTensorQ& t, const RunConfig& cfg) {
  CharCoeffMap map(d, symmetric, t);
  const int dim = map.dim(), D = map.deg();
  MatrixXcd J(D, dim);
  std::vector<Complex> cp, cm;
  for (int m = 0; m < dim; ++m) {
    std::vector<Complex> ap = base, am = base;
    ap[m] += cfg.fd_step;
    am[m] -= cfg.fd_step;
    map.eval(ap, cp, nullptr);
    map.eval(am, cm, nullptr);
    for (int i = 0; i < D; ++i) J(i, m) = (cp[i] - cm[i]) / (2.0 * cfg.fd_step);
  }
  return rank_by_svd(J, cfg.svd_rank_rel_tol);
}

}  // namespace

SquareSystem make_square_system(std::vector<MPolyC> eqs) {
  SquareSystem S;
  S.nvars = eqs.empty() ? 0 : eqs[0].nvars();
  if (eqs.empty() || static_cast<int>(eqs.size()) != S.nvars)
    throw std::invalid_argument("make_square_system: need one equation per variable");
  for (const auto& eq : eqs) {
    if (eq.nvars() != S.nvars) throw std::invalid_argument("make_square_system: arity mismatch");
    int deg = eq.degree();
    if (deg < 1) throw std::invalid_argument("make_square_system: equations must be nonconstant");
    S.degrees.push_back(deg);
  }
  S.equations = std::move(eqs);
  return S;
}

std::vector<PathSolution> solve_total_degree(const SquareSystem& S, Rng& rng,
                                             const RunConfig& cfg) {
  if (S.nvars < 1 || static_cast<int>(S.equations.size()) != S.nvars ||
      static_cast<int>(S.degrees.size()) != S.nvars)
    throw std::invalid_argument("solve_total_degree: malformed system");
  SquareSystemEval F(S);
  return run_paths(F, S.degrees, rng, cfg);
}

std::vector<std::vector<Complex>> distinct_converged(const std::vector<PathSolution>& paths,
                                                     double tol) {
  std::vector<std::vector<Complex>> reps;
  for (const auto& p : paths) {
    if (!p.converged) continue;
    bool fresh = true;
    for (const auto& r : reps) {
      double dist = 0.0, norm = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) {
        dist += std::norm(p.coords[i] - r[i]);
        norm += std::norm(r[i]);
      }
      if (std::sqrt(dist) <= tol * (1.0 + std::sqrt(norm))) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(p.coords);
  }
  return reps;
}

std::vector<Complex> char_map_value(const std::vector<Complex>& a, int d, bool symmetric,
                                    const PSTensorQ& t) {
  CharCoeffMap map(d, symmetric, t);
  std::vector<Complex> c;
  map.eval(a, c, nullptr);
  return c;
}

std::vector<std::vector<Complex>> char_map_jacobian(const std::vector<Complex>& a, int d,
                                                    bool symmetric, const PSTensorQ& t) {
  CharCoeffMap map(d, symmetric, t);
  std::vector<Complex> c;
  std::vector<std::vector<Complex>> J;
  map.eval(a, c, &J);
  return J;
}

FiberReport fiber_of_charpoly(const UPolyC& phi, int n, int d, const PSTensorQ& t, bool symmetric,
                              Rng& rng, const RunConfig& cfg) {
  if (!symmetric) throw std::invalid_argument("fiber_of_charpoly: only the symmetric map is supported");
  if (n != 1 || d < 3 || d > 6)
    throw std::invalid_argument("fiber_of_charpoly: supported shapes are (1,3)..(1,6)");
  CharCoeffMap map(d, true, t);
  const int D = map.deg(), k = map.dim();
  if (phi.degree() != D) throw std::invalid_argument("fiber_of_charpoly: char poly degree mismatch");
  if (std::abs(phi.coeffs()[D] - Complex(1.0)) > 1e-9)
    throw std::invalid_argument("fiber_of_charpoly: char poly must be monic");
  std::vector<Complex> targets(D);
  for (int i = 1; i <= D; ++i) targets[i - 1] = phi.coeffs()[D - i];

  FiberEval F(map, targets, rng);
  std::vector<int> degrees(k);
  for (int i = 0; i < k; ++i) degrees[i] = i + 1;
  std::vector<PathSolution> paths = run_paths(F, degrees, rng, cfg);

  FiberReport rep;
  rep.paths_tracked = static_cast<int>(paths.size());
  for (const auto& p : paths) {
    if (p.diverged) rep.diverged += 1;
    else if (!p.converged) rep.path_failures += 1;
  }
  if (4 * rep.path_failures > rep.paths_tracked)
    throw std::runtime_error("fiber_of_charpoly: excessive path failures");

  // survivors must satisfy all D coefficient equations, not just the square mix
  std::vector<PathSolution> kept;
  std::vector<Complex> c;
  for (const auto& p : paths) {
    if (!p.converged) continue;
    map.eval(p.coords, c, nullptr);
    bool pass = true;
    for (int i = 0; i < D && pass; ++i)
      if (std::abs(c[i] - targets[i]) > cfg.fiber_filter_residual * std::max(1.0, std::abs(targets[i])))
        pass = false;
    if (pass) kept.push_back(p);
  }
  for (const auto& coords : distinct_converged(kept, cfg.solution_dedup_tol))
    rep.solutions.emplace_back(1, d, binary_from_coeffs(coords));
  return rep;
}

int jacobian_rank_sym(const SymFormQ& f, const PSTensorQ& t, const RunConfig& cfg) {
  if (f.n != 1) throw std::invalid_argument("jacobian_rank_sym: binary forms only");
  std::vector<Complex> base = binary_coeffs(to_complex_poly(f.form), f.d);
  return jacobian_rank_impl(base, f.d, true, t, cfg);
}

int jacobian_rank_ps(const PSTensorQ& T, const PSTensorQ& t, const RunConfig& cfg) {
  if (T.n != 1) throw std::invalid_argument("jacobian_rank_ps: binary tensors only");
  std::vector<Complex> base = binary_coeffs(to_complex_poly(T.components[0]), T.d - 1);
  std::vector<Complex> f1 = binary_coeffs(to_complex_poly(T.components[1]), T.d - 1);
  base.insert(base.end(), f1.begin(), f1.end());
  return jacobian_rank_impl(base, T.d, false, t, cfg);
}

}  // namespace tenspec
