#pragma once

#include "semifree/rational.hpp"

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace semifree {

enum class Bundle { Trivial, Nontrivial };

std::string to_string(Bundle b);

/// An S^2-bundle over a closed surface of genus g. The basis {u, v} of H^2 is
/// u = dual of a fiber, v = dual of a section (self-intersection 0 for the
/// trivial bundle, -1 for the nontrivial one), with u.v = 1.
class RuledSurface {
public:
    RuledSurface(Bundle bundle, int genus);

    Bundle bundle() const { return bundle_; }
    int genus() const { return genus_; }
    bool trivial() const { return bundle_ == Bundle::Trivial; }
    /// S^2 x S^2, the only case admitting a non-trivial gluing isometry.
    bool is_s2_x_s2() const { return trivial() && genus_ == 0; }

    long uu() const { return 0; }
    long uv() const { return 1; }
    long vv() const { return trivial() ? 0 : -1; }

    friend bool operator==(const RuledSurface&, const RuledSurface&) = default;

private:
    Bundle bundle_;
    int genus_;
};

std::string describe(const RuledSurface& s);

/// cu * u + cv * v with exact rational coefficients.
class H2Class {
public:
    H2Class() = default;
    H2Class(Rational cu, Rational cv) : cu_(std::move(cu)), cv_(std::move(cv)) {}
    H2Class(long cu, long cv) : cu_(cu), cv_(cv) {}

    /// Integral class constructor; throws std::invalid_argument on fractional input.
    static H2Class integral(const Rational& cu, const Rational& cv);

    const Rational& cu() const { return cu_; }
    const Rational& cv() const { return cv_; }
    bool is_integral() const;

    H2Class operator+(const H2Class& o) const { return {cu_ + o.cu_, cv_ + o.cv_}; }
    H2Class operator-(const H2Class& o) const { return {cu_ - o.cu_, cv_ - o.cv_}; }
    H2Class operator-() const { return {-cu_, -cv_}; }
    H2Class& operator+=(const H2Class& o);
    friend H2Class operator*(const Rational& k, const H2Class& x) { return {k * x.cu_, k * x.cv_}; }

    bool operator==(const H2Class& o) const { return cu_ == o.cu_ && cv_ == o.cv_; }
    bool operator<(const H2Class& o) const
    {
        if (cu_ != o.cu_)
            return cu_ < o.cu_;
        return cv_ < o.cv_;
    }

private:
    Rational cu_{0};
    Rational cv_{0};
};

std::string to_string(const H2Class& x);

/// The swap u <-> v of S^2 x S^2.
H2Class swapped(const H2Class& x);

/// Integral bilinear pairing of H^2 evaluated on the fundamental class.
Rational intersection(const H2Class& x, const H2Class& y, const RuledSurface& s);

H2Class chern_class(const RuledSurface& s);

struct NonRepresentable : std::domain_error {
    using std::domain_error::domain_error;
};

/// Genus g' with D.D - c1.D = 2g' - 2. Throws NonRepresentable when g' is negative
/// or fractional, std::invalid_argument when D is not integral.
long adjunction_genus(const H2Class& dual, const RuledSurface& s);
std::optional<long> adjunction_genus_if(const H2Class& dual, const RuledSurface& s);

/// psi^* u = a u + b v, psi^* v = c u + d v.
struct IsometryMatrix {
    long a = 1, b = 0, c = 0, d = 1;

    static IsometryMatrix identity() { return {1, 0, 0, 1}; }
    static IsometryMatrix swap() { return {0, 1, 1, 0}; }

    H2Class pullback(const H2Class& x) const;
    bool preserves_form(const RuledSurface& s) const;

    auto operator<=>(const IsometryMatrix&) const = default;
};

std::string to_string(const IsometryMatrix& m);

struct H2ActionSets {
    std::vector<IsometryMatrix> stage1;    ///< all form-preserving integer matrices
    std::vector<IsometryMatrix> final_set; ///< those compatible with a symplectomorphism
};

/// Stage 1 searches entries in [-3, 3] and throws std::logic_error if any solution
/// touches the boundary. Stage 2 keeps matrices that send the fiber class to a class
/// of positive area for some cone class and preserve the adjunction genera of u and v.
H2ActionSets h2_symplectomorphism_actions(const RuledSurface& s);

/// Ratios r = c/d of cone classes d (r u + v), d > 0, as an open interval (lo, hi).
/// Every cone in this model has d > 0 (the fiber is symplectic), so the ratio is a
/// complete parametrization up to positive scale.
struct RatioInterval {
    Rational lo{0};
    std::optional<Rational> hi; ///< nullopt means +infinity

    bool empty() const { return hi && *hi <= lo; }
    bool contains(const Rational& r) const { return r > lo && (!hi || r < *hi); }
    /// Restricts to { r : constant + slope * r > 0 }.
    void require_positive(const Rational& constant, const Rational& slope);
    /// A rational strictly inside; requires !empty().
    Rational sample() const;
};

/// One strict linear condition on_c * c + on_d * d > 0 on a class c u + d v.
struct ConeCondition {
    Rational on_c;
    Rational on_d;
    std::string text;
};

/// The inequalities used by symplectic_cone_test. Exact for the trivial bundle
/// and for the nontrivial bundle over the sphere; necessary only otherwise.
std::vector<ConeCondition> cone_conditions(const RuledSurface& s);

RatioInterval cone_ratios(const RuledSurface& s);

enum class ConeCertainty { Exact, NecessaryOnly };

struct ConeVerdict {
    bool inside = false;
    ConeCertainty certainty = ConeCertainty::Exact;
    std::string reason;
};

ConeVerdict symplectic_cone_test(const H2Class& w, const RuledSurface& s);

} // namespace semifree
