#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tenspec/config.hpp"
#include "tenspec/resultant.hpp"
#include "tenspec/tensor.hpp"

namespace tenspec {

// Root of the characteristic polynomial. `exact` is set when the value was
// reconstructed as a rational and verified by exact evaluation.
struct Eigenvalue {
  Complex value;
  int multiplicity = 1;
  std::optional<Rational> exact;
};

// Projective representative: unit 2-norm, first nonzero coordinate rotated
// to the positive real axis.
std::vector<Complex> normalize_projective(std::vector<Complex> v);

// Chordal distance between normalized representatives; zero iff the two
// points agree in projective space.
double projective_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

struct EigenPair {
  Complex lambda;
  std::vector<Complex> w;  // normalized projective representative
  int algebraic_multiplicity = 1;
  double residual = 0.0;  // ||T(w) - lambda t(w)||_2
};

struct EigenvectorSet {
  std::vector<std::vector<Complex>> points;  // normalized, deduplicated
  // Eigenvalue per point after the joint (point, lambda) polish; equals
  // lambda0 on the exact routes. Kept because a root of the double-precision
  // characteristic polynomial can sit ~1e-7 off the true eigenvalue, while
  // the polished pair satisfies the eigen equation to machine precision.
  std::vector<Complex> lambda_refined;
  bool infinite = false;  // Sing(T - lambda0 t) is positive-dimensional
};

struct EigenschemeReport {
  std::vector<EigenPair> pairs;
  bool reduced = false;
  bool infinite = false;
};

// Common zeros in P^2 of three quadrics, for the (2,3) eigenvector step.
// Elimination of x2 from the given pair first, random coordinate frames when
// the leading coefficients degenerate, random combinations of all three when
// the pair shares a component. `curve` reports a positive-dimensional locus.
struct QuadricZeros {
  std::vector<std::vector<Complex>> points;
  bool curve = false;
};
QuadricZeros isolated_common_zeros_quadrics(const MPoly<Complex>& q0, const MPoly<Complex>& q1,
                                            const MPoly<Complex>& q2,
                                            const RunConfig& cfg = RunConfig{});

// Roots of char_poly(T, t) with multiplicities summing to D(n, d). Rational
// roots are divided out exactly (square-free part by square-free part);
// anything left goes to the numeric root finder. Sorted by (re, im).
std::vector<Eigenvalue> eigenvalues(const PSTensorQ& T, const PSTensorQ& t,
                                    const RunConfig& cfg = RunConfig{});
std::vector<Eigenvalue> eigenvalues(const PSTensorQ& T, const RunConfig& cfg = RunConfig{});

// Eigenvectors of T for the eigenvalue lambda0: the points of
// Sing(T - lambda0 t) = common zeros of the components. Supported shapes:
// n = 1 (gcd of the two binary components; exact for rational lambda0) and
// (n, d) = (2, 3) (x2 elimination per isolated_common_zeros_quadrics).
// Throws invalid_argument when lambda0 is not an eigenvalue.
EigenvectorSet eigenvectors_for(const PSTensorQ& T, const PSTensorQ& t, const Rational& lambda0,
                                const RunConfig& cfg = RunConfig{});
EigenvectorSet eigenvectors_for(const PSTensorQ& T, const PSTensorQ& t, const Complex& lambda0,
                                const RunConfig& cfg = RunConfig{});

// Union of eigenvectors over all eigenvalues. reduced means: no
// positive-dimensional part, D distinct eigenvalues, and D pairwise-distinct
// eigenvectors (distances above cfg.projective_dedup_tol).
EigenschemeReport eigenscheme(const PSTensorQ& T, const PSTensorQ& t,
                              const RunConfig& cfg = RunConfig{});
EigenschemeReport eigenscheme(const PSTensorQ& T, const RunConfig& cfg = RunConfig{});

// ||T(w) - lambda t(w)||_2 for a normalized representative w.
double eigenpair_residual(const PSTensorQ& T, const PSTensorQ& t, const Complex& lambda,
                          const std::vector<Complex>& w);

// (algebraic multiplicity of lambda0 in char_poly, multiplicity of the point
// T - lambda0 t on the discriminant hypersurface). Binary symmetric tensors
// only: both T and t must be symmetric_to_ps images. The first entry is
// checked to dominate the second; a violation is a logic error.
std::pair<int, int> mult_lower_bound_check(const PSTensorQ& T, const PSTensorQ& t,
                                           const Rational& lambda0,
                                           const RunConfig& cfg = RunConfig{});

}  // namespace tenspec
