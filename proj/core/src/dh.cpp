#include "semifree/dh.hpp"

#include <algorithm>
#include <sstream>

namespace semifree {

LinearClassPath::LinearClassPath(Rational t_start_, Rational t_end_, Affine c_, Affine d_,
                                 H2Class euler_)
    : t_start(std::move(t_start_)), t_end(std::move(t_end_)), c(std::move(c_)),
      d(std::move(d_)), euler(std::move(euler_))
{
    if (!(t_start < t_end))
        throw std::invalid_argument("piece [" + to_string(t_start) + ", " + to_string(t_end) +
                                    "] is empty or reversed");
    if (!euler.is_integral())
        throw std::invalid_argument("Euler class " + to_string(euler) + " is not integral");
}

LinearClassPath LinearClassPath::from_class(const Rational& t_start, const Rational& t_end,
                                            const H2Class& omega_at_start, const H2Class& euler)
{
    Rational cs = -euler.cu();
    Rational ds = -euler.cv();
    Affine c{omega_at_start.cu() - cs * t_start, cs};
    Affine d{omega_at_start.cv() - ds * t_start, ds};
    return {t_start, t_end, c, d, euler};
}

bool LinearClassPath::slope_law_holds() const
{
    return c.slope == -euler.cu() && d.slope == -euler.cv();
}

bool LinearClassPath::in_cone(const RuledSurface& s, std::string* why) const
{
    Rational mid = (t_start + t_end) / 2;
    for (const auto& cond : cone_conditions(s)) {
        auto value = [&](const Rational& t) {
            Rational x = cond.on_c * c(t) + cond.on_d * d(t);
            return x;
        };
        if (value(t_start) < 0 || value(t_end) < 0 || value(mid) <= 0) {
            if (why)
                *why = "class leaves the cone (" + cond.text + ") on (" + to_string(t_start) +
                       ", " + to_string(t_end) + ")";
            return false;
        }
    }
    return true;
}

Quadratic Quadratic::operator*(const Quadratic& o) const
{
    Quadratic r;
    r.c0 = c0 * o.c0;
    r.c1 = c0 * o.c1 + c1 * o.c0;
    r.c2 = c0 * o.c2 + c1 * o.c1 + c2 * o.c0;
    Rational c3 = c1 * o.c2 + c2 * o.c1;
    Rational c4 = c2 * o.c2;
    if (c3 != 0 || c4 != 0)
        throw std::logic_error("product exceeds degree 2");
    return r;
}

namespace {

std::vector<Rational> critical_points(const Quadratic& q, const Rational& a, const Rational& b)
{
    std::vector<Rational> pts{a, b};
    if (q.c2 != 0) {
        Rational vertex = -q.c1 / (2 * q.c2);
        if (a < vertex && vertex < b)
            pts.push_back(vertex);
    }
    return pts;
}

} // namespace

Rational Quadratic::max_on(const Rational& a, const Rational& b) const
{
    auto pts = critical_points(*this, a, b);
    Rational best = (*this)(pts.front());
    for (const auto& t : pts)
        best = std::max(best, (*this)(t));
    return best;
}

Rational Quadratic::min_on(const Rational& a, const Rational& b) const
{
    auto pts = critical_points(*this, a, b);
    Rational best = (*this)(pts.front());
    for (const auto& t : pts)
        best = std::min(best, (*this)(t));
    return best;
}

bool Quadratic::positive_on_open(const Rational& a, const Rational& b) const
{
    const Quadratic& q = *this;
    Rational mid = (a + b) / 2;
    if (q(a) < 0 || q(b) < 0 || q(mid) <= 0)
        return false;
    if (c2 > 0) {
        Rational vertex = -c1 / (2 * c2);
        if (a < vertex && vertex < b && q(vertex) <= 0)
            return false;
    }
    return true;
}

std::string to_string(const Quadratic& q)
{
    return to_string(q.c0) + " + " + to_string(q.c1) + "*t + " + to_string(q.c2) + "*t^2";
}

PiecewisePoly::PiecewisePoly(std::vector<Rational> breaks, std::vector<Quadratic> pieces)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces))
{
    if (pieces_.empty() || breaks_.size() != pieces_.size() + 1)
        throw std::invalid_argument("piecewise polynomial needs n pieces and n+1 breakpoints");
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
        if (!(breaks_[i] < breaks_[i + 1]))
            throw std::invalid_argument("breakpoints must be strictly increasing");
}

std::size_t PiecewisePoly::piece_index(const Rational& t) const
{
    if (t < lower() || t > upper())
        throw std::out_of_range("t = " + to_string(t) + " outside the domain");
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t);
    std::size_t idx = static_cast<std::size_t>(it - breaks_.begin());
    idx = idx == 0 ? 0 : idx - 1;
    return std::min(idx, pieces_.size() - 1);
}

Rational PiecewisePoly::operator()(const Rational& t) const { return pieces_[piece_index(t)](t); }

std::optional<Rational> PiecewisePoly::value_left(const Rational& t) const
{
    if (t <= lower() || t > upper())
        return std::nullopt;
    auto it = std::lower_bound(breaks_.begin(), breaks_.end(), t);
    std::size_t idx = static_cast<std::size_t>(it - breaks_.begin()) - 1;
    return pieces_[idx](t);
}

std::optional<Rational> PiecewisePoly::value_right(const Rational& t) const
{
    if (t < lower() || t >= upper())
        return std::nullopt;
    return pieces_[piece_index(t)](t);
}

std::optional<Rational> PiecewisePoly::derivative_left(const Rational& t) const
{
    if (t <= lower() || t > upper())
        return std::nullopt;
    auto it = std::lower_bound(breaks_.begin(), breaks_.end(), t);
    std::size_t idx = static_cast<std::size_t>(it - breaks_.begin()) - 1;
    return pieces_[idx].derivative()(t);
}

std::optional<Rational> PiecewisePoly::derivative_right(const Rational& t) const
{
    if (t < lower() || t >= upper())
        return std::nullopt;
    return pieces_[piece_index(t)].derivative()(t);
}

bool PiecewisePoly::continuous() const
{
    for (std::size_t i = 1; i < pieces_.size(); ++i)
        if (pieces_[i - 1](breaks_[i]) != pieces_[i](breaks_[i]))
            return false;
    return true;
}

H2Class evolve_omega(const H2Class& omega_r, const H2Class& euler, const Rational& r,
                     const Rational& t)
{
    Rational dt = t - r;
    return omega_r - dt * euler;
}

H2Class cross_wall_euler(const H2Class& e_minus, std::span<const H2Class> duals)
{
    if (!e_minus.is_integral())
        throw std::invalid_argument("Euler class " + to_string(e_minus) + " is not integral");
    H2Class e = e_minus;
    for (const auto& dual : duals) {
        if (!dual.is_integral())
            throw std::invalid_argument("Poincare dual " + to_string(dual) + " is not integral");
        e += dual;
    }
    return e;
}

Rational isolated_euler_square_drop(const Rational& e_sq, long p, long q, long r)
{
    if (p <= 0 || q <= 0 || r <= 0)
        throw NonPositiveWeight("isolated fixed point weights (p, q, -r) need p, q, r >= 1");
    Rational out = e_sq - make_rational(Integer(1), Integer(p) * q * r);
    return out;
}

PiecewisePoly dh_volume(std::span<const LinearClassPath> path, const RuledSurface& s)
{
    if (path.empty())
        throw std::invalid_argument("empty class path");
    std::vector<Rational> breaks{path.front().t_start};
    std::vector<Quadratic> pieces;
    for (const auto& piece : path) {
        if (piece.t_start != breaks.back())
            throw std::invalid_argument("class path pieces must be contiguous");
        Quadratic c{piece.c.constant, piece.c.slope, 0};
        Quadratic d{piece.d.constant, piece.d.slope, 0};
        Quadratic cc = c * c, cd = c * d, dd = d * d;
        Quadratic f;
        f.c0 = s.uu() * cc.c0 + 2 * s.uv() * cd.c0 + s.vv() * dd.c0;
        f.c1 = s.uu() * cc.c1 + 2 * s.uv() * cd.c1 + s.vv() * dd.c1;
        f.c2 = s.uu() * cc.c2 + 2 * s.uv() * cd.c2 + s.vv() * dd.c2;
        pieces.push_back(f);
        breaks.push_back(piece.t_end);
    }
    return {std::move(breaks), std::move(pieces)};
}

Rational predicted_slope_jump(const H2Class& omega_s, std::span<const H2Class> duals,
                              const RuledSurface& s)
{
    H2Class total;
    for (const auto& d : duals)
        total += d;
    Rational jump = -2 * intersection(omega_s, total, s);
    return jump;
}

namespace {

void check_breakpoint(const Quadratic& left, const Quadratic& right, const Rational& t_left,
                      const Rational& t_right, const Rational& label, LogConcavityReport& report)
{
    Rational fl = left(t_left), fr = right(t_right);
    if (fl <= 0 || fr <= 0)
        throw NonPositiveFunction("DH function vanishes at interior point t = " + to_string(label));
    if (fl != fr) {
        report.violations.push_back({LogConcavityViolation::Kind::Discontinuity, label, 0,
                                     "f jumps from " + to_string(fl) + " to " + to_string(fr)});
        return;
    }
    Rational dl = left.derivative()(t_left), dr = right.derivative()(t_right);
    if (dl < dr)
        report.violations.push_back({LogConcavityViolation::Kind::KinkIncrease, label, 0,
                                     "f' increases from " + to_string(dl) + " to " +
                                         to_string(dr)});
}

} // namespace

LogConcavityReport check_log_concave(const PiecewisePoly& f, bool periodic)
{
    LogConcavityReport report;
    const auto& br = f.breaks();
    const auto& pcs = f.pieces();
    for (std::size_t i = 0; i < pcs.size(); ++i) {
        if (!pcs[i].positive_on_open(br[i], br[i + 1]))
            throw NonPositiveFunction("DH function is not positive on (" + to_string(br[i]) +
                                      ", " + to_string(br[i + 1]) + ")");
        const Quadratic& q = pcs[i];
        Quadratic d1 = q.derivative();
        Quadratic d2 = d1.derivative();
        Quadratic test = d2 * q - d1 * d1;
        Rational worst = test.max_on(br[i], br[i + 1]);
        if (worst > 0)
            report.violations.push_back({LogConcavityViolation::Kind::PieceInequality, br[i], i,
                                         "f''f - f'^2 reaches " + to_string(worst)});
    }
    for (std::size_t i = 1; i < pcs.size(); ++i)
        check_breakpoint(pcs[i - 1], pcs[i], br[i], br[i], br[i], report);
    if (periodic)
        check_breakpoint(pcs.back(), pcs.front(), f.upper(), f.lower(), f.lower(), report);
    return report;
}

std::vector<SlopeStep> min_slope(std::span<const LinearClassPath> path)
{
    std::vector<SlopeStep> steps;
    for (const auto& piece : path) {
        Affine diff{piece.c.constant - piece.d.constant, piece.c.slope - piece.d.slope};
        auto lower_slope = [&](const Rational& lo, const Rational& hi) {
            Rational mid = (lo + hi) / 2;
            return diff(mid) < 0 ? piece.c.slope : piece.d.slope;
        };
        if (diff.slope != 0) {
            Rational cross = -diff.constant / diff.slope;
            if (piece.t_start < cross && cross < piece.t_end) {
                steps.push_back({piece.t_start, cross, lower_slope(piece.t_start, cross), true});
                steps.push_back({cross, piece.t_end, lower_slope(cross, piece.t_end), false});
                continue;
            }
        }
        steps.push_back({piece.t_start, piece.t_end, lower_slope(piece.t_start, piece.t_end)});
    }
    return steps;
}

MinSlopeReport check_min_slope_monotone(std::span<const SlopeStep> steps,
                                        std::span<const WallMark> walls, bool periodic)
{
    MinSlopeReport report;
    if (steps.empty())
        return report;
    auto wall_at = [&](const Rational& t) -> const WallMark* {
        for (const auto& w : walls) {
            if (w.s == t)
                return &w;
            if (periodic && (t == steps.front().lo || t == steps.back().hi) &&
                (w.s == steps.front().lo || w.s == steps.back().hi))
                return &w;
        }
        return nullptr;
    };
    auto examine = [&](const SlopeStep& before, const SlopeStep& after, const Rational& at,
                       bool crossing) {
        Rational drop = before.slope - after.slope;
        const WallMark* wall = wall_at(at);
        report.drops.push_back({at, drop, wall != nullptr});
        if (report.violation)
            return;
        std::ostringstream os;
        if (wall) {
            if (drop < 0)
                os << "min-slope increases by " << to_string(-drop) << " at wall t = "
                   << to_string(at);
            else if (wall->positive_genus && drop < 2)
                os << "min-slope drops by only " << to_string(drop)
                   << " across a wall with a positive-genus surface at t = " << to_string(at);
        } else if (crossing && drop <= 0) {
            os << "min-slope does not strictly decrease at regular crossing t = "
               << to_string(at);
        } else if (drop < 0) {
            os << "min-slope increases by " << to_string(-drop) << " at regular value t = "
               << to_string(at);
        }
        if (!os.str().empty())
            report.violation = os.str();
    };
    for (std::size_t i = 0; i + 1 < steps.size(); ++i)
        examine(steps[i], steps[i + 1], steps[i].hi, steps[i].crossing_after);
    if (periodic)
        examine(steps.back(), steps.front(), steps.front().lo, false);
    return report;
}

} // namespace semifree
