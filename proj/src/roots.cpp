#include "tenspec/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tenspec {
namespace {

double coeff_scale_at(const std::vector<Complex>& c, double az) {
  double s = 0.0, p = 1.0;
  for (const Complex& v : c) {
    s += std::abs(v) * p;
    p *= az;
  }
  return s;
}

// coefficients of p(z0 + h) as a polynomial in h
std::vector<Complex> taylor_shift(std::vector<Complex> c, Complex z0) {
  int n = static_cast<int>(c.size()) - 1;
  for (int j = 0; j < n; ++j)
    for (int i = n - 1; i >= j; --i) c[i] += z0 * c[i + 1];
  return c;
}

struct Evaluated {
  Complex p, dp;
};

Evaluated horner2(const std::vector<Complex>& c, Complex z) {
  Complex p(0, 0), dp(0, 0);
  for (std::size_t i = c.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
  return {p, dp};
}

void newton_polish(const std::vector<Complex>& c, Complex& z, int iters) {
  for (int k = 0; k < iters; ++k) {
    auto [p, dp] = horner2(c, z);
    if (std::abs(dp) == 0.0) return;
    Complex step = p / dp;
    z -= step;
    if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) return;
  }
}

// z ← z − m·p/p' converges quadratically at an m-fold root
void modified_newton(const std::vector<Complex>& c, Complex& z, int m) {
  for (int k = 0; k < 60; ++k) {
    auto [p, dp] = horner2(c, z);
    if (std::abs(dp) == 0.0) return;
    Complex step = static_cast<double>(m) * p / dp;
    z -= step;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(z))) return;
  }
}

std::vector<Complex> aberth(const std::vector<Complex>& c, const RunConfig& cfg) {
  int n = static_cast<int>(c.size()) - 1;
  Complex cn = c.back();
  double cauchy = 0.0;
  for (int i = 0; i < n; ++i) cauchy = std::max(cauchy, std::abs(c[i] / cn));
  double radius = 0.5 * (1.0 + cauchy);

  std::vector<Complex> z(n);
  for (int j = 0; j < n; ++j) {
    double th = 2.0 * M_PI * j / n + 0.4;
    z[j] = radius * Complex(std::cos(th), std::sin(th));
  }

  std::vector<bool> done(n, false);
  for (int iter = 0; iter < cfg.aberth_max_iters; ++iter) {
    bool all = true;
    for (int j = 0; j < n; ++j) {
      if (done[j]) continue;
      auto [p, dp] = horner2(c, z[j]);
      double scale = coeff_scale_at(c, std::abs(z[j]));
      if (std::abs(p) <= cfg.aberth_rel_residual * scale) {
        done[j] = true;
        continue;
      }
      all = false;
      Complex w;
      if (std::abs(dp) == 0.0) {
        w = Complex(1e-8, 1e-8);
      } else {
        w = p / dp;
      }
      Complex sum(0, 0);
      for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        Complex d = z[j] - z[k];
        if (std::abs(d) == 0.0) d = Complex(1e-14, 1e-14);
        sum += Complex(1, 0) / d;
      }
      Complex denom = Complex(1, 0) - w * sum;
      Complex step = (std::abs(denom) < 1e-14) ? w : w / denom;
      z[j] -= step;
      if (std::abs(step) <= 1e-14 * (1.0 + std::abs(z[j]))) done[j] = true;
    }
    if (all) break;
  }
  return z;
}

struct Work {
  Complex z;
  bool assigned = false;
};

}  // namespace

std::vector<RootCluster> univariate_roots(const UPolyC& p, const RunConfig& cfg) {
  if (p.is_zero_poly()) throw std::invalid_argument("univariate_roots: zero polynomial");
  if (p.degree() < 1) return {};

  std::vector<Complex> c = p.coeffs();
  // exact zeros at the origin come off first (typical for exact inputs)
  int zeros_at_origin = 0;
  while (c.size() > 1 && is_zero(c.front())) {
    c.erase(c.begin());
    ++zeros_at_origin;
  }

  std::vector<Work> roots;
  int n = static_cast<int>(c.size()) - 1;
  if (n >= 1) {
    std::vector<Complex> z = aberth(c, cfg);
    for (Complex v : z) roots.push_back({v, false});
  }
  for (int k = 0; k < zeros_at_origin; ++k) roots.push_back({Complex(0, 0), false});

  const std::vector<Complex>& cc = p.coeffs();  // certificates run on the full poly
  double acn = std::abs(cc.back());
  int total = static_cast<int>(roots.size());

  std::vector<RootCluster> out;

  auto component_of = [&](int seed, double tol) {
    std::vector<int> comp{seed};
    std::vector<bool> in(total, false);
    in[seed] = true;
    for (std::size_t h = 0; h < comp.size(); ++h) {
      for (int j = 0; j < total; ++j) {
        if (in[j] || roots[j].assigned) continue;
        if (std::abs(roots[j].z - roots[comp[h]].z) <= tol) {
          in[j] = true;
          comp.push_back(j);
        }
      }
    }
    return comp;
  };

  for (int m = total; m >= 2; --m) {
    for (int i = 0; i < total; ++i) {
      if (roots[i].assigned) continue;
      double az = std::abs(roots[i].z);
      double scale = coeff_scale_at(cc, az);
      double bound = 10.0 * std::max(cfg.aberth_rel_residual, 1e3 * 2.2e-16) * scale / std::max(acn, 1e-300);
      double tol = 5.0 * std::pow(bound, 1.0 / m);
      tol = std::min(tol, 1e-2 * (1.0 + az));
      tol = std::max(tol, cfg.root_cluster_radius * (1.0 + az));
      std::vector<int> comp = component_of(i, tol);
      if (static_cast<int>(comp.size()) != m) continue;

      Complex center(0, 0);
      for (int j : comp) center += roots[j].z;
      center /= static_cast<double>(m);
      modified_newton(cc, center, m);

      double rho = 1e3 * 2.2e-16 * (1.0 + std::abs(center));
      for (int j : comp) rho = std::max(rho, std::abs(roots[j].z - center));
      rho *= 2.0;

      std::vector<Complex> ts = taylor_shift(cc, center);
      double am = (m < static_cast<int>(ts.size())) ? std::abs(ts[m]) : 0.0;
      bool certified = am > 0.0;
      double pw = 1.0;
      double am_rho = am * std::pow(rho, m);
      for (int k = 0; k < m && certified; ++k) {
        if (std::abs(ts[k]) * pw > 1e-2 * am_rho) certified = false;
        pw *= rho;
      }
      if (!certified) continue;

      out.push_back({center, m});
      for (int j : comp) roots[j].assigned = true;
    }
  }

  for (int i = 0; i < total; ++i) {
    if (roots[i].assigned) continue;
    Complex z = roots[i].z;
    newton_polish(cc, z, 4);
    out.push_back({z, 1});
  }

  // final dedup at the configured radius; exact duplicates fold together
  std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  std::vector<RootCluster> merged;
  for (const RootCluster& r : out) {
    bool folded = false;
    for (RootCluster& m : merged) {
      if (std::abs(m.value - r.value) <= cfg.root_cluster_radius * (1.0 + std::abs(m.value))) {
        m.value = (m.value * static_cast<double>(m.multiplicity) + r.value * static_cast<double>(r.multiplicity)) /
                  static_cast<double>(m.multiplicity + r.multiplicity);
        m.multiplicity += r.multiplicity;
        folded = true;
        break;
      }
    }
    if (!folded) merged.push_back(r);
  }
  std::sort(merged.begin(), merged.end(), [](const RootCluster& a, const RootCluster& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });

  int msum = 0;
  for (const auto& r : merged) msum += r.multiplicity;
  if (msum != p.degree()) throw std::logic_error("univariate_roots: multiplicity bookkeeping mismatch");
  return merged;
}

std::vector<Complex> univariate_roots_flat(const UPolyC& p, const RunConfig& cfg) {
  std::vector<Complex> out;
  for (const RootCluster& r : univariate_roots(p, cfg))
    for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.value);
  return out;
}

}  // namespace tenspec
