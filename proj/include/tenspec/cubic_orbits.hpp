#pragma once

#include <string>
#include <vector>

#include "tenspec/config.hpp"
#include "tenspec/disc_geometry.hpp"
#include "tenspec/rng.hpp"
#include "tenspec/spectra.hpp"
#include "tenspec/tensor.hpp"

namespace tenspec {

// Component of the tangent cone of the ternary-cubic discriminant at a
// singular cubic. Two shapes occur: the hyperplane H_p of cubics through a
// point p, and the degree-4 cone Disc'_l of cubics whose restriction to the
// line l = 0 is a singular binary cubic.
enum class TangentConeKind {
  hyperplane_at_point,     // anchor holds the point coordinates
  singular_cone_over_line  // anchor holds the linear form's coefficients
};

struct TangentConeComponent {
  TangentConeKind kind{};
  std::vector<Rational> anchor;  // length 3 either way
  int scheme_multiplicity = 1;
};

struct OrbitDescriptor {
  std::string label;
  SymFormQ representative;
  int multiplicity = 0;  // mult of the discriminant along the orbit closure
  std::vector<TangentConeComponent> tangent_cone;
};

// The eight GL(3)-orbits of nonzero singular plane cubics, by increasing
// multiplicity 1, 2, 2, 3, 3, 4, 6, 8: nodal, cuspidal, conic+secant,
// conic+tangent, triangle, asterisk, line+double-line, triple-line.
const std::vector<OrbitDescriptor>& orbit_table();

// Isolated singular points of the curve f = 0: common zeros of the three
// partial-derivative quadrics. `curve` flags a positive-dimensional singular
// locus (repeated-line cubics).
QuadricZeros singular_points_cubic(const SymFormQ& f, const RunConfig& cfg = RunConfig{});

// Orbit label of a nonzero ternary cubic, "smooth" when the discriminant is
// nonzero, or "inconclusive" when the numeric singular-point data sits too
// close to a stratum boundary to decide honestly. The decision tree branches
// on the singular locus (curve vs point count) and, at a unique singular
// point, on the Hessian rank and an exact tangent-line division test; every
// branch is exact when the singular data can be certified rational.
std::string classify_cubic(const SymFormQ& f, const RunConfig& cfg = RunConfig{});

// Set-theoretic membership of g in some listed tangent-cone component:
// g(p) = 0 for hyperplane components, disc(g restricted to l = 0) = 0 for
// cone components. Exact.
bool tangent_cone_contains_cubic(const OrbitDescriptor& orb, const SymFormQ& g);

// Random cubic inside the tangent cone at the representative: hyperplane
// components get a random cubic with one coefficient solved for g(p) = 0;
// cone components get nf(x1, x2) + x0 * (random quadric) with nf drawn from
// the normalized singular binary cubics of the orbit's restriction list.
SymFormQ random_cubic_in_tangent_cone(const OrbitDescriptor& orb, Rng& rng);

// Line orders of disc(rep + t g): generic directions (outside the tangent
// cone, so the order equals the orbit multiplicity) when constrained is
// false, tangent-cone directions with disc(g) != 0 otherwise.
HurwitzReport hurwitz_sample_cubic(const OrbitDescriptor& orb, int trials, bool constrained,
                                   Rng& rng, const RunConfig& cfg = RunConfig{});

}  // namespace tenspec
