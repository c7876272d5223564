#pragma once

#include "semifree/homology.hpp"

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace semifree {

/// A fixed surface of genus g_i whose Poincare dual in the reduced space is a u + b v.
struct SurfaceComponent {
    long genus = 0;
    H2Class dual;

    bool operator==(const SurfaceComponent&) const = default;
};

/// An isolated fixed point with weights (p, q, -r).
struct IsolatedPoint {
    long p = 1, q = 1, r = 1;

    bool operator==(const IsolatedPoint&) const = default;
};

using FixedComponent = std::variant<SurfaceComponent, IsolatedPoint>;

std::string to_string(const FixedComponent& c);

enum class End { Min, Max };

struct ExtremalAnnotation {
    End end = End::Min;
    long genus = 0;
    long normal_chern = 0;
    bool twisted_branch = false; ///< S^2 x S^2 maximum only

    bool operator==(const ExtremalAnnotation&) const = default;
};

struct ParityMismatch : std::domain_error {
    using std::domain_error::domain_error;
};

/// Symplectic area of the dual against w is positive.
bool positivity(const H2Class& dual, const H2Class& w, const RuledSurface& s);

/// All integral a u + b v with |a|, |b| <= bound, adjunction genus g_i and positive
/// area against w. Sorted.
std::vector<H2Class> solve_duals(const RuledSurface& s, long g_i, const H2Class& w, long bound);

/// Euler class of the circle bundle next to an extremal surface. Throws ParityMismatch
/// if the parity of normal_chern disagrees with the bundle type, std::invalid_argument
/// for a twisted branch outside S^2 x S^2.
H2Class extremal_euler(const RuledSurface& s, const ExtremalAnnotation& ann);

/// For base genus g >= 1 an interior sphere must have b = 0.
bool interior_sphere_rule(const H2Class& dual, const RuledSurface& s);

enum class Position { Interior, Min, Max };

/// Relative position of c_s and d_s, which decides the g = 0 sign facts.
enum class Side { CBelowD, Equal, CAboveD };

Side side_of(const H2Class& w);

struct ComponentFacts {
    bool pass = true;
    std::string rule;                ///< first violated rule, empty on pass
    std::string detail;
    std::vector<std::string> facts;  ///< what was established on the way
};

/// Runs the per-component rules in order: integral-dual, adjunction, minimality,
/// positivity, interior-sphere-degree, sign. Extremal positions require a surface of
/// the base genus.
ComponentFacts classify_component(const FixedComponent& comp, const RuledSurface& s,
                                  const H2Class& w, Position position);

} // namespace semifree
