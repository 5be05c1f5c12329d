#pragma once

#include <cstdint>

namespace tenspec {

// Central knobs. Defaults are the contract values used by the verification
// suite; CLI flags override per run.
struct RunConfig {
  std::uint64_t seed = 20240901;

  // univariate root finding
  int aberth_max_iters = 200;
  double aberth_rel_residual = 1e-12;
  double root_cluster_radius = 1e-8;

  // projective point handling
  double projective_dedup_tol = 1e-6;
  double eigen_residual_tol = 1e-8;      // scaled by (1 + max|coeff|)
  double numeric_gcd_tol = 1e-8;

  // Macaulay resultant degenerate-denominator retries
  int macaulay_max_retries = 10;

  // path tracking
  double track_min_step = 1e-6;
  double track_max_step = 0.1;
  int track_max_corrector_iters = 3;
  double track_divergence_norm = 1e8;
  double track_corrector_tol = 1e-10;
  double polish_residual_tol = 1e-10;
  double fiber_filter_residual = 1e-6;
  double solution_dedup_tol = 1e-6;

  // numeric rank
  double fd_step = 1e-5;
  double svd_rank_rel_tol = 1e-8;
};

}  // namespace tenspec
