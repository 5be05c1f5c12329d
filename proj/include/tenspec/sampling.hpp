#pragma once

#include "tenspec/rng.hpp"
#include "tenspec/tensor.hpp"

namespace tenspec {

// Dense random forms: every coefficient drawn, numerators/denominators
// uniform in [-bound, bound] / [1, bound]. The draw order is the canonical
// monomial order, so equal seeds give equal forms.
inline MPolyQ random_form(Rng& rng, int nvars, int deg, long bound = 100) {
  MPolyQ p(nvars);
  for (const auto& e : monomials_of_degree(nvars, deg)) p.add_term(e, rng.rational(bound));
  return p;
}

inline MPolyQ random_form_nonzero(Rng& rng, int nvars, int deg, long bound = 100) {
  for (;;) {
    MPolyQ p = random_form(rng, nvars, deg, bound);
    if (!p.is_zero_poly()) return p;
  }
}

inline SymFormQ random_symform(Rng& rng, int n, int d, long bound = 100) {
  return SymFormQ(n, d, random_form_nonzero(rng, n + 1, d, bound));
}

inline PSTensorQ random_pstensor(Rng& rng, int n, int d, long bound = 100) {
  std::vector<MPolyQ> comps;
  for (int i = 0; i <= n; ++i) comps.push_back(random_form(rng, n + 1, d - 1, bound));
  return PSTensorQ(n, d, std::move(comps));
}

}  // namespace tenspec
