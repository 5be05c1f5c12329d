#pragma once

#include <vector>

#include "tenspec/config.hpp"
#include "tenspec/poly.hpp"
#include "tenspec/rng.hpp"
#include "tenspec/tensor.hpp"

namespace tenspec {

// Endpoint of one tracked path. residual is the infinity norm of the target
// equations at coords, each equation scaled by max(1, its coefficient size);
// converged implies residual < 1e-8, diverged endpoints carry no coords of
// interest and are excluded from solution counts.
struct PathSolution {
  std::vector<Complex> coords;
  double residual = 0.0;
  bool converged = false;
  bool diverged = false;
};

// Square polynomial system over complex coefficients.
struct SquareSystem {
  int nvars = 0;
  std::vector<MPolyC> equations;
  std::vector<int> degrees;  // actual total degrees, recorded by the factory
};

// Validates squareness (one equation per variable, every degree >= 1) and
// records the actual total degrees.
SquareSystem make_square_system(std::vector<MPolyC> eqs);

// Total-degree homotopy continuation. Tracks prod(degrees) paths from the
// start system {x_i^{d_i} = r_i} (r_i random on the unit circle) along
// H(x, s) = (1-s) gamma G + s F with a random unit complex gamma, Euler
// predictor plus at most three Newton corrector iterations per step, adaptive
// step length between track_min_step and track_max_step, divergence declared
// past track_divergence_norm, and a final Newton polish on F itself. Returns
// one entry per start point. Paths that neither converge nor cleanly diverge
// count as failures; rerunning with a fresh rng retries with a new gamma.
// The tracker keeps no shared mutable state: concurrent callers on separate
// Rng streams are safe.
std::vector<PathSolution> solve_total_degree(const SquareSystem& S, Rng& rng,
                                             const RunConfig& cfg = RunConfig{});

// Converged endpoints only, deduplicated within tol (relative Euclidean).
std::vector<std::vector<Complex>> distinct_converged(const std::vector<PathSolution>& paths,
                                                     double tol = 1e-6);

// Monic characteristic coefficients (c_1, ..., c_D) of the tensor encoded by
// the complex coefficient vector a: for the symmetric map a holds the d+1
// binary form coefficients (a[k] multiplies x0^k x1^{d-k}); otherwise the two
// degree-(d-1) component coefficient vectors concatenated (2d entries).
// Evaluated by interpolating res(T - lambda t) at D+1 nodes on an adaptively
// scaled circle; exact in exact arithmetic, backward-stable in doubles.
std::vector<Complex> char_map_value(const std::vector<Complex>& a, int d, bool symmetric,
                                    const PSTensorQ& t);

// Jacobian of the same map (rows c_1..c_D, columns the entries of a), by
// adjugate-trace differentiation of the interpolated determinant.
std::vector<std::vector<Complex>> char_map_jacobian(const std::vector<Complex>& a, int d,
                                                    bool symmetric, const PSTensorQ& t);

struct FiberReport {
  std::vector<SymForm<Complex>> solutions;  // deduplicated, all D residuals pass
  int paths_tracked = 0;
  int diverged = 0;
  int path_failures = 0;  // neither converged nor diverged
};

// All symmetric binary degree-d forms T with char poly res(T - lambda t)
// normalized monic equal to phi. Supported shapes: n = 1, d in {3,4,5,6},
// symmetric, res(t) != 0, phi monic of degree D(1,d). The D coefficient
// equations have degrees 1..D; for d >= 4 the system is overdetermined and a
// degree-triangular random mix of count = #unknowns is tracked instead, with
// survivors filtered by all D residuals < fiber_filter_residual. Throws on
// unsupported input and on excessive path failures.
FiberReport fiber_of_charpoly(const UPolyC& phi, int n, int d, const PSTensorQ& t, bool symmetric,
                              Rng& rng, const RunConfig& cfg = RunConfig{});

// Numeric rank of the D x dim Jacobian of the coefficient map at the given
// base point: entries by central finite differences with step fd_step,
// rank by SVD with relative threshold svd_rank_rel_tol. The symmetric map
// has dim = d+1, the partially symmetric one dim = 2d.
int jacobian_rank_sym(const SymFormQ& f, const PSTensorQ& t, const RunConfig& cfg = RunConfig{});
int jacobian_rank_ps(const PSTensorQ& T, const PSTensorQ& t, const RunConfig& cfg = RunConfig{});

}  // namespace tenspec
