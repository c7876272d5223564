#pragma once

#include "semifree/homology.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace semifree {

/// constant + slope * t
struct Affine {
    Rational constant{0};
    Rational slope{0};

    Rational operator()(const Rational& t) const { return constant + slope * t; }
    bool operator==(const Affine&) const = default;
};

/// A regular interval (t_start, t_end) on which [omega_t] = c(t) u + d(t) v and the
/// circle bundle has Euler class `euler`.
struct LinearClassPath {
    Rational t_start;
    Rational t_end;
    Affine c;
    Affine d;
    H2Class euler;

    /// Throws std::invalid_argument unless t_start < t_end and euler is integral.
    LinearClassPath(Rational t_start, Rational t_end, Affine c, Affine d, H2Class euler);

    /// The path through `omega` at t_start whose slopes follow -euler.
    static LinearClassPath from_class(const Rational& t_start, const Rational& t_end,
                                      const H2Class& omega_at_start, const H2Class& euler);

    H2Class omega(const Rational& t) const { return {c(t), d(t)}; }
    bool slope_law_holds() const;
    /// Every cone inequality is affine in t, so positivity on the open interval is
    /// decided by the closed endpoint values plus the midpoint.
    bool in_cone(const RuledSurface& s, std::string* why = nullptr) const;

    bool operator==(const LinearClassPath&) const = default;
};

/// c0 + c1 t + c2 t^2
struct Quadratic {
    Rational c0{0}, c1{0}, c2{0};

    Rational operator()(const Rational& t) const { return c0 + (c1 + c2 * t) * t; }
    Quadratic derivative() const { return {c1, 2 * c2, 0}; }
    Quadratic operator*(const Quadratic& o) const; ///< requires total degree <= 2
    Quadratic operator-(const Quadratic& o) const { return {c0 - o.c0, c1 - o.c1, c2 - o.c2}; }
    bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0; }
    bool operator==(const Quadratic&) const = default;

    /// Exact extrema over the closed interval [a, b].
    Rational max_on(const Rational& a, const Rational& b) const;
    Rational min_on(const Rational& a, const Rational& b) const;
    /// Strict positivity on the open interval (a, b).
    bool positive_on_open(const Rational& a, const Rational& b) const;
};

std::string to_string(const Quadratic& q);

/// Piecewise polynomial of degree <= 2. Piece i lives on [breaks[i], breaks[i+1]].
class PiecewisePoly {
public:
    PiecewisePoly() = default;
    PiecewisePoly(std::vector<Rational> breaks, std::vector<Quadratic> pieces);

    const std::vector<Rational>& breaks() const { return breaks_; }
    const std::vector<Quadratic>& pieces() const { return pieces_; }
    std::size_t size() const { return pieces_.size(); }
    const Rational& lower() const { return breaks_.front(); }
    const Rational& upper() const { return breaks_.back(); }

    /// Index of the piece containing t; interior breakpoints resolve to the right
    /// piece, the upper bound to the last one.
    std::size_t piece_index(const Rational& t) const;
    Rational operator()(const Rational& t) const;
    std::optional<Rational> value_left(const Rational& t) const;
    std::optional<Rational> value_right(const Rational& t) const;
    std::optional<Rational> derivative_left(const Rational& t) const;
    std::optional<Rational> derivative_right(const Rational& t) const;
    bool continuous() const;

private:
    std::vector<Rational> breaks_;
    std::vector<Quadratic> pieces_;
};

H2Class evolve_omega(const H2Class& omega_r, const H2Class& euler, const Rational& r,
                     const Rational& t);

/// e_+ = e_- + sum of the Poincare duals at the wall.
H2Class cross_wall_euler(const H2Class& e_minus, std::span<const H2Class> duals);

struct NonPositiveWeight : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Change of the Euler-class square across one isolated index-2 point of weights
/// (p, q, -r): returns e_sq - 1/(pqr).
Rational isolated_euler_square_drop(const Rational& e_sq, long p, long q, long r);

/// f(t) = integral of omega_t^2 on each piece.
PiecewisePoly dh_volume(std::span<const LinearClassPath> path, const RuledSurface& s);

/// Predicted jump f'(s+) - f'(s-) across a wall of surface components:
/// -2 * integral of omega_s . (sum of duals).
Rational predicted_slope_jump(const H2Class& omega_s, std::span<const H2Class> duals,
                              const RuledSurface& s);

struct NonPositiveFunction : std::domain_error {
    using std::domain_error::domain_error;
};

struct LogConcavityViolation {
    enum class Kind { PieceInequality, Discontinuity, KinkIncrease };
    Kind kind;
    Rational at;           ///< breakpoint, or the left end of the offending piece
    std::size_t piece = 0; ///< piece index for PieceInequality
    std::string detail;
};

struct LogConcavityReport {
    std::vector<LogConcavityViolation> violations;
    bool pass() const { return violations.empty(); }
};

/// Checks f''f - f'^2 <= 0 on every piece, value continuity and a non-increasing
/// derivative at every breakpoint. With `periodic`, the upper end is glued to the
/// lower end and the seam is checked like any other breakpoint. Throws
/// NonPositiveFunction if f fails to be positive on the interior of the domain.
LogConcavityReport check_log_concave(const PiecewisePoly& f, bool periodic = false);

struct SlopeStep {
    Rational lo;
    Rational hi;
    Rational slope;
    bool crossing_after = false; ///< hi is a regular crossing of c_t and d_t
};

/// d/dt min(c_t, d_t), defined off the walls and off regular crossings.
std::vector<SlopeStep> min_slope(std::span<const LinearClassPath> path);

struct WallMark {
    Rational s;
    bool positive_genus = false;
};

struct SlopeDrop {
    Rational at;
    Rational drop; ///< slope before minus slope after
    bool at_wall = false;
};

struct MinSlopeReport {
    std::vector<SlopeDrop> drops;
    std::optional<std::string> violation;
    bool pass() const { return !violation; }
};

/// The step function must not increase across a wall, must strictly decrease across
/// a regular crossing, and must drop by at least 2 across a wall holding a surface of
/// positive genus.
MinSlopeReport check_min_slope_monotone(std::span<const SlopeStep> steps,
                                        std::span<const WallMark> walls, bool periodic = false);

} // namespace semifree
