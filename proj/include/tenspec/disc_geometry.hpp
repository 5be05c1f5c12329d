#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tenspec/config.hpp"
#include "tenspec/resultant.hpp"
#include "tenspec/rng.hpp"
#include "tenspec/tensor.hpp"

namespace tenspec {

// Point of P^1 together with the exponent of its linear form in f. Finite
// points are w = (value : 1); the infinity point (1 : 0) is the zero of x1.
struct BinaryRoot {
  bool at_infinity = false;
  Complex value{};
  std::optional<Rational> exact_value;  // set when the finite root is rational
  int multiplicity = 1;
};

struct RootFactorization {
  std::vector<BinaryRoot> roots;  // finite roots by (re, im), infinity last
  bool exact = false;             // every finite root carries exact_value
};

// f = prod l_j^{e_j}. Rational roots are split off exactly (reconstruction
// verified by exact evaluation); the rest come from the numeric solver, per
// square-free factor so multiplicities stay exact integers.
RootFactorization factor_binary(const SymFormQ& f, const RunConfig& cfg = RunConfig{});

// mult of f on the binary discriminant hypersurface: sum of (e_j - 1).
// Exact: d minus the number of distinct linear factors, via gcd degrees.
int mult_disc_binary(const SymFormQ& f);

// Set-theoretic membership of g in the tangent cone at f: does g vanish at
// some root of f with e_j >= 2? Throws when f has distinct roots.
bool tangent_cone_contains(const SymFormQ& f, const SymFormQ& g);

// Intersection multiplicity at t = 0 of the line {f + t g} with the
// discriminant hypersurface: vanishing order of disc(f + t g) as an exact
// polynomial in t (interpolated at D+1 rational nodes). nullopt means the
// line lies inside the hypersurface. Throws when f, g are proportional.
// Shapes follow the exact discriminant: binary forms and ternary cubics.
std::optional<int> line_order(const SymFormQ& f, const SymFormQ& g,
                              const RunConfig& cfg = RunConfig{});

struct BuiltBinary {
  SymFormQ f;
  std::vector<std::pair<Rational, int>> roots;  // finite root r_j with exponent e_j
};

// Product of (x0 - r_j x1)^{e_j} over distinct random rationals r_j.
BuiltBinary random_singular_binary(int d, const std::vector<int>& partition, Rng& rng);

// Partitions of d that contain a part >= 2, largest-part-first within each,
// enumerated in descending lex order.
std::vector<std::vector<int>> partitions_with_repeat(int d);

struct HurwitzReport {
  int n = 0, d = 0, trials = 0;
  int max_order = 0;               // over lines not contained in the hypersurface
  std::map<int, int> histogram;    // order -> count
  int contained_count = 0;
};

// Random lines through random singular binary forms, alternating unconstrained
// directions with directions inside the tangent cone at f. n = 1 only; the
// plane-cubic sampler lives with the orbit table.
HurwitzReport hurwitz_sample(int n, int d, int trials, Rng& rng,
                             const RunConfig& cfg = RunConfig{});

struct BincubicIdentity {
  std::string label;
  bool matched = false;
  Rational scalar;        // this library's disc divided by the reference normalization
  std::string mismatch;   // first failing coefficient when !matched
};

struct BincubicReport {
  std::vector<BincubicIdentity> identities;
  bool specialization_ok = false;  // a2 = 0 collapses the first identity's quartic term
  bool all_ok() const {
    if (identities.empty() || !specialization_ok) return false;
    for (const auto& id : identities)
      if (!id.matched) return false;
    return true;
  }
};

// Symbolic expansion of disc(f + t g) over Q[a0,a1,a2][t] for f = x0^3 and
// f = x0^2 x1, with g = a0 x0^3 + 3 a1 x0^2 x1 + 3 a2 x0 x1^2 (a3 = 0),
// matched coefficient-by-coefficient against the closed forms
//   t^3 (disc(g) t - 4 a2^3)   and   t^2 (disc(g) t^2 + 2 a1 a2^2 t + (1/3) a2^2)
// up to one rational scalar per identity; the scalar is solved for, not assumed.
BincubicReport bincubic_identities();

}  // namespace tenspec
