#pragma once

#include <vector>

#include "tenspec/config.hpp"
#include "tenspec/poly.hpp"

namespace tenspec {

struct RootCluster {
  Complex value;
  int multiplicity = 1;
};

// All complex roots of p, multiplicities summing to deg p. Aberth-Ehrlich
// iteration followed by a multiplicity pass: residual-scaled clustering,
// modified Newton at the cluster center, and a Taylor-coefficient certificate
// that splits clusters which are not genuinely multiple.
std::vector<RootCluster> univariate_roots(const UPolyC& p, const RunConfig& cfg = RunConfig{});

// Convenience: clusters expanded to a flat list, multiplicity copies each.
std::vector<Complex> univariate_roots_flat(const UPolyC& p, const RunConfig& cfg = RunConfig{});

}  // namespace tenspec
