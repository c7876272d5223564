#include "semifree/classifier.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace semifree {

bool ActionData::has_fixed_points() const
{
    for (const auto& w : walls)
        if (!w.components.empty())
            return true;
    return min.has_value() || max.has_value();
}

namespace {

bool is_circle(const ActionData& d) { return d.domain.kind == DomainKind::Circle; }

bool seam_at_wrap(const ActionData& d)
{
    return d.seam && (*d.seam == d.domain.t0 || *d.seam == d.domain.t1);
}

void check_structure(const ActionData& data)
{
    const auto& pieces = data.pieces;
    if (pieces.empty())
        throw MalformedDocument("no regular pieces");
    if (!(data.domain.t0 < data.domain.t1))
        throw MalformedDocument("domain is empty or reversed");
    if (pieces.front().t_start != data.domain.t0 || pieces.back().t_end != data.domain.t1)
        throw MalformedDocument("pieces must start at " + to_string(data.domain.t0) +
                                " and end at " + to_string(data.domain.t1));
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
        if (pieces[i].t_end != pieces[i + 1].t_start)
            throw MalformedDocument("pieces are not contiguous at t = " +
                                    to_string(pieces[i].t_end));

    if (data.twisted && !data.surface.is_s2_x_s2())
        throw MalformedDocument("twisted data exists only for S^2 x S^2");
    if (data.seam) {
        if (!is_circle(data))
            throw MalformedDocument("a seam is only meaningful on a circle domain");
        if (!data.twisted)
            throw MalformedDocument("a seam requires twisted data");
    } else if (data.twisted && is_circle(data)) {
        throw MalformedDocument("twisted circle data needs a seam line");
    }
    if (is_circle(data) && (data.min || data.max))
        throw MalformedDocument("extremum lines need an interval domain");

    std::vector<Rational> junctions;
    for (std::size_t i = 0; i + 1 < pieces.size(); ++i)
        junctions.push_back(pieces[i].t_end);
    for (std::size_t i = 0; i < data.walls.size(); ++i) {
        const auto& w = data.walls[i];
        if (i > 0 && !(data.walls[i - 1].s < w.s))
            throw MalformedDocument("walls must be listed in increasing order without repeats");
        if (w.components.empty())
            throw MalformedDocument("wall at t = " + to_string(w.s) + " has no components");
        if (std::find(junctions.begin(), junctions.end(), w.s) == junctions.end())
            throw MalformedDocument("wall at t = " + to_string(w.s) +
                                    " does not sit between two pieces");
        if (data.seam && *data.seam == w.s)
            throw MalformedDocument("the seam must be a regular value");
    }
    for (const auto& t : junctions) {
        bool walled = std::any_of(data.walls.begin(), data.walls.end(),
                                  [&](const Wall& w) { return w.s == t; });
        if (!walled && !(data.seam && *data.seam == t))
            throw MalformedDocument("pieces meet at t = " + to_string(t) + " without a wall");
    }
    if (data.seam && !seam_at_wrap(data) &&
        std::find(junctions.begin(), junctions.end(), *data.seam) == junctions.end())
        throw MalformedDocument("seam at t = " + to_string(*data.seam) +
                                " is not a piece boundary");
}

std::size_t piece_ending_at(const ActionData& data, const Rational& s)
{
    for (std::size_t i = 0; i < data.pieces.size(); ++i)
        if (data.pieces[i].t_end == s)
            return i;
    throw MalformedDocument("no piece ends at t = " + to_string(s));
}

std::string at(const Rational& t) { return "t = " + to_string(t); }

std::string piece_name(const LinearClassPath& p)
{
    return "piece (" + to_string(p.t_start) + ", " + to_string(p.t_end) + ")";
}

Rational euler_square(const H2Class& e, const RuledSurface& s) { return intersection(e, e, s); }

std::vector<WallMark> wall_marks(const ActionData& data)
{
    std::vector<WallMark> marks;
    for (const auto& w : data.walls) {
        bool positive = std::any_of(w.components.begin(), w.components.end(), [](const auto& c) {
            const auto* s = std::get_if<SurfaceComponent>(&c);
            return s && s->genus >= 1;
        });
        marks.push_back({w.s, positive});
    }
    return marks;
}

void check_wall(const ActionData& data, const Wall& wall, ValidationReport& report)
{
    const auto& S = data.surface;
    std::size_t i = piece_ending_at(data, wall.s);
    const auto& left = data.pieces[i];
    const auto& right = data.pieces[i + 1];
    const std::string loc = "wall " + at(wall.s);

    if (left.omega(wall.s) != right.omega(wall.s))
        report.violations.push_back({"continuity", loc,
                                     "[omega] jumps from " + to_string(left.omega(wall.s)) +
                                         " to " + to_string(right.omega(wall.s))});

    std::vector<H2Class> duals;
    std::vector<IsolatedPoint> points;
    for (const auto& c : wall.components) {
        if (const auto* s = std::get_if<SurfaceComponent>(&c))
            duals.push_back(s->dual);
        else
            points.push_back(std::get<IsolatedPoint>(c));
    }

    bool duals_integral = std::all_of(duals.begin(), duals.end(),
                                      [](const H2Class& d) { return d.is_integral(); });
    if (duals_integral && points.empty()) {
        H2Class expected = cross_wall_euler(left.euler, duals);
        if (expected != right.euler)
            report.violations.push_back({"euler-jump", loc,
                                         "expected e = " + to_string(expected) + " after the wall, found " +
                                             to_string(right.euler)});
    } else if (duals_integral) {
        if (points.size() > 1 || !duals.empty())
            report.notes.push_back(loc +
                                   ": several components with isolated points, the e^2 drop is "
                                   "applied additively (extrapolated)");
        H2Class before = cross_wall_euler(left.euler, duals);
        Rational expected = euler_square(before, S);
        for (const auto& p : points) {
            try {
                expected = isolated_euler_square_drop(expected, p.p, p.q, p.r);
            } catch (const NonPositiveWeight& e) {
                report.violations.push_back({"weights", loc, e.what()});
            }
        }
        Rational found = euler_square(right.euler, S);
        if (found != expected)
            report.violations.push_back({"isolated-euler-square", loc,
                                         "integral of e^2 should become " + to_string(expected) +
                                             ", found " + to_string(found)});
    }

    const H2Class w = left.omega(wall.s);
    for (const auto& c : wall.components) {
        ComponentFacts facts = classify_component(c, S, w, Position::Interior);
        if (!facts.pass)
            report.violations.push_back({facts.rule, loc + ", " + to_string(c), facts.detail});
    }
}

void check_gluing(const ActionData& data, const LinearClassPath& left, const LinearClassPath& right,
                  const Rational& t_left, const Rational& t_right, bool swap,
                  const std::string& loc, ValidationReport& report)
{
    H2Class wl = left.omega(t_left), el = left.euler;
    if (swap) {
        wl = swapped(wl);
        el = swapped(el);
    }
    if (wl != right.omega(t_right))
        report.violations.push_back({"seam", loc,
                                     "[omega] does not match across the gluing: " + to_string(wl) +
                                         " vs " + to_string(right.omega(t_right))});
    if (el != right.euler)
        report.violations.push_back({"seam", loc,
                                     "Euler classes differ across the gluing: " + to_string(el) +
                                         " vs " + to_string(right.euler)});
    (void)data;
}

void check_extrema(const ActionData& data, ValidationReport& report)
{
    const auto& S = data.surface;
    auto check = [&](const ExtremalAnnotation& ann, const LinearClassPath& piece,
                     const Rational& t) {
        const std::string loc = std::string(ann.end == End::Min ? "minimum" : "maximum") + " " + at(t);
        if (ann.genus != S.genus())
            report.violations.push_back({"extremal-genus", loc,
                                         "extremal surface has genus " + std::to_string(ann.genus) +
                                             ", base genus is " + std::to_string(S.genus())});
        if (ann.twisted_branch && (ann.end == End::Min || !data.twisted))
            report.violations.push_back({"twisted-branch", loc,
                                         "the twisted branch is only legal at the maximum of "
                                         "twisted data"});
        if (ann.end == End::Max && data.twisted && !ann.twisted_branch)
            report.violations.push_back({"twisted-branch", loc,
                                         "twisted data needs the twisted maximum branch"});
        try {
            H2Class e = extremal_euler(S, ann);
            if (e != piece.euler)
                report.violations.push_back({"extremal-euler", loc,
                                             "normal Chern number " + std::to_string(ann.normal_chern) +
                                                 " forces e = " + to_string(e) + ", found " +
                                                 to_string(piece.euler)});
        } catch (const ParityMismatch& e) {
            report.violations.push_back({"extremal-parity", loc, e.what()});
        } catch (const std::invalid_argument& e) {
            report.violations.push_back({"twisted-branch", loc, e.what()});
        }
        const Rational c = piece.c(t), d = piece.d(t);
        bool collapse = ann.end == End::Max && ann.twisted_branch ? (c == 0 && d > 0)
                                                                  : (d == 0 && c > 0);
        if (!collapse)
            report.violations.push_back({"fiber-collapse", loc,
                                         "the collapsing sphere class must reach area 0 while the "
                                         "other stays positive, found " +
                                             to_string(piece.omega(t))});
    };
    if (data.min)
        check(*data.min, data.pieces.front(), data.domain.t0);
    if (data.max)
        check(*data.max, data.pieces.back(), data.domain.t1);
}

} // namespace

H2Class omega_at_wall(const ActionData& data, const Wall& wall)
{
    return data.pieces[piece_ending_at(data, wall.s)].omega(wall.s);
}

ValidationReport validate_action_data(const ActionData& data)
{
    check_structure(data);
    ValidationReport report;
    const auto& S = data.surface;

    if (!S.trivial() && S.genus() >= 1)
        report.notes.push_back("cone membership on " + describe(S) + " is necessary-only");

    for (const auto& piece : data.pieces) {
        if (!piece.slope_law_holds())
            report.violations.push_back({"slope-law", piece_name(piece),
                                         "slopes (" + to_string(piece.c.slope) + ", " +
                                             to_string(piece.d.slope) + ") differ from -e = " +
                                             to_string(-piece.euler)});
        std::string why;
        if (!piece.in_cone(S, &why))
            report.violations.push_back({"cone", piece_name(piece), why});
    }

    for (const auto& wall : data.walls)
        check_wall(data, wall, report);

    if (data.seam && !seam_at_wrap(data)) {
        std::size_t i = piece_ending_at(data, *data.seam);
        check_gluing(data, data.pieces[i], data.pieces[i + 1], *data.seam, *data.seam, true,
                     "seam " + at(*data.seam), report);
    }
    if (is_circle(data))
        check_gluing(data, data.pieces.back(), data.pieces.front(), data.domain.t1,
                     data.domain.t0, seam_at_wrap(data), "wrap " + at(data.domain.t0), report);

    check_extrema(data, report);

    try {
        PiecewisePoly f = dh_volume(data.pieces, S);
        LogConcavityReport lc = check_log_concave(f, is_circle(data));
        for (const auto& v : lc.violations)
            report.violations.push_back({"dh-log-concavity", at(v.at), v.detail});
        report.dh = std::move(f);
    } catch (const NonPositiveFunction& e) {
        report.violations.push_back({"dh-positive", "domain", e.what()});
    }

    if (S.is_s2_x_s2()) {
        auto steps = min_slope(data.pieces);
        auto marks = wall_marks(data);
        MinSlopeReport ms = check_min_slope_monotone(steps, marks, is_circle(data));
        if (!ms.pass())
            report.violations.push_back({"min-slope", "domain", *ms.violation});
    }
    return report;
}

std::string to_string(Certificate c)
{
    switch (c) {
    case Certificate::None:
        return "none";
    case Certificate::ZeroSum:
        return "zerosum";
    case Certificate::ZeroSum2:
        return "zerosum2";
    case Certificate::MinSlopeMonotonicity:
        return "min-slope monotonicity";
    case Certificate::DhLogConcavity:
        return "DH log-concavity";
    }
    return "?";
}

std::string HamiltonianVerdict::summary() const
{
    switch (outcome) {
    case Outcome::Inconsistent:
        return "inconsistent: action must be Hamiltonian [" + to_string(certificate) + "] " + detail;
    case Outcome::ConsistentCandidate:
        return "consistent non-Hamiltonian candidate";
    case Outcome::InvalidData:
        return "invalid data: " + detail;
    }
    return detail;
}

namespace {

HamiltonianVerdict inconsistent(Certificate c, std::string detail)
{
    return {HamiltonianVerdict::Outcome::Inconsistent, c, std::move(detail)};
}

struct ComponentScan {
    bool all_surfaces = true;
    bool all_pass = true;
    bool positivity = true;
    H2Class dual_sum;
    std::string first_failure;
};

ComponentScan scan_components(const ActionData& data)
{
    ComponentScan scan;
    for (const auto& wall : data.walls) {
        const H2Class w = omega_at_wall(data, wall);
        for (const auto& c : wall.components) {
            if (const auto* s = std::get_if<SurfaceComponent>(&c)) {
                scan.dual_sum += s->dual;
                if (!positivity(s->dual, w, data.surface))
                    scan.positivity = false;
            } else {
                scan.all_surfaces = false;
            }
            ComponentFacts facts = classify_component(c, data.surface, w, Position::Interior);
            if (!facts.pass && scan.all_pass) {
                scan.all_pass = false;
                scan.first_failure = facts.rule + " at " + at(wall.s) + ": " + facts.detail;
            }
        }
    }
    return scan;
}

HamiltonianVerdict dh_route(const ActionData& data, const ComponentScan& scan)
{
    PiecewisePoly f;
    try {
        f = dh_volume(data.pieces, data.surface);
        LogConcavityReport lc = check_log_concave(f, true);
        if (!lc.pass())
            return inconsistent(Certificate::DhLogConcavity,
                                "DH function is not log-concave on the circle at " +
                                    at(lc.violations.front().at) + ": " +
                                    lc.violations.front().detail);
    } catch (const NonPositiveFunction& e) {
        return inconsistent(Certificate::DhLogConcavity,
                            std::string("DH function is not positive: ") + e.what());
    }
    // A log-concave function on a circle is constant.
    for (const auto& wall : data.walls) {
        for (const auto& c : wall.components) {
            if (std::holds_alternative<IsolatedPoint>(c))
                return inconsistent(Certificate::DhLogConcavity,
                                    "constant DH function forces integral of e^2 = 0, but the "
                                    "isolated point at " + at(wall.s) +
                                        " lowers it by 1/(pqr)");
        }
    }
    if (!scan.positivity)
        return inconsistent(Certificate::DhLogConcavity,
                            "constant DH function needs a zero slope jump, which contradicts "
                            "positive area of the fixed surfaces");
    return inconsistent(Certificate::DhLogConcavity,
                        "a fixed surface of positive area makes f' jump by "
                        "-2 integral(omega . D) < 0, so f cannot be constant on the circle");
}

} // namespace

HamiltonianVerdict decide_hamiltonian(const ActionData& data)
{
    if (!is_circle(data))
        throw std::invalid_argument("decide_hamiltonian needs circle-domain data");
    check_structure(data);

    if (!data.has_fixed_points()) {
        ValidationReport report = validate_action_data(data);
        if (report.pass())
            return {HamiltonianVerdict::Outcome::ConsistentCandidate, Certificate::None,
                    "empty fixed set with consistent classes"};
        const auto& v = report.violations.front();
        return {HamiltonianVerdict::Outcome::InvalidData, Certificate::None,
                v.rule + " at " + v.location + ": " + v.detail};
    }

    const auto& S = data.surface;
    ComponentScan scan = scan_components(data);
    const Rational& sa = scan.dual_sum.cu();
    const Rational& sb = scan.dual_sum.cv();

    if (scan.all_surfaces && (S.genus() >= 1 || !S.trivial())) {
        if (sb != 0)
            return inconsistent(Certificate::ZeroSum, "sum of b_i is " + to_string(sb) + ", not 0");
        if (scan.all_pass)
            return inconsistent(Certificate::ZeroSum,
                                "all b_i vanish, so positivity makes all a_i positive, which "
                                "contradicts sum a_i = 0");
        if (sa != 0)
            return inconsistent(Certificate::ZeroSum, "sum of a_i is " + to_string(sa) + ", not 0");
        return dh_route(data, scan);
    }

    if (scan.all_surfaces && S.is_s2_x_s2()) {
        if (!data.twisted) {
            if (sa != 0 || sb != 0)
                return inconsistent(Certificate::ZeroSum,
                                    "sums of a_i and b_i are " + to_string(sa) + " and " +
                                        to_string(sb) + ", not both 0");
        } else if (sa + sb != 0) {
            return inconsistent(Certificate::ZeroSum2,
                                "sum of a_i + b_i is " + to_string(sa + sb) + ", not 0");
        }
        auto steps = min_slope(data.pieces);
        auto marks = wall_marks(data);
        MinSlopeReport ms = check_min_slope_monotone(steps, marks, true);
        if (!ms.pass())
            return inconsistent(Certificate::MinSlopeMonotonicity, *ms.violation);
        if (scan.all_pass)
            return inconsistent(Certificate::ZeroSum2,
                                "the min-slope function is constant on the circle, so every "
                                "component is a sphere with a_i + b_i > 0, which contradicts "
                                "sum (a_i + b_i) = 0");
        return dh_route(data, scan);
    }

    return dh_route(data, scan);
}

PositiveGenusCount count_positive_genus(const ActionData& data)
{
    PositiveGenusCount out;
    std::vector<long> genera;
    for (const auto& wall : data.walls)
        for (const auto& c : wall.components)
            if (const auto* s = std::get_if<SurfaceComponent>(&c); s && s->genus >= 1)
                genera.push_back(s->genus);
    for (const auto* ann : {&data.min, &data.max})
        if (*ann && (*ann)->genus >= 1)
            genera.push_back((*ann)->genus);
    out.count = static_cast<int>(genera.size());
    out.all_base_genus = std::all_of(genera.begin(), genera.end(),
                                     [&](long g) { return g == data.surface.genus(); });

    const std::string prefix =
        "the input data is invalid (this is not a counterexample to the counting theorem): ";
    if (out.count == 2)
        throw TheoremViolation(prefix +
                               "exactly two fixed surfaces have positive genus; with positive-genus "
                               "extrema the Euler classes force an interior sphere with b != 0, "
                               "which would map to the base with nonzero degree "
                               "(interior-sphere-degree rule)");
    if (out.count > 4)
        throw TheoremViolation(prefix + std::to_string(out.count) +
                               " fixed surfaces have positive genus, at most four are possible");
    if (out.count == 4 && !out.all_base_genus)
        throw TheoremViolation(prefix +
                               "four positive-genus fixed surfaces must all have the base genus " +
                               std::to_string(data.surface.genus()));
    return out;
}

std::vector<ActionData> circle_candidates(const RuledSurface& s, long bound, int max_walls,
                                          bool twisted)
{
    if (twisted && !s.is_s2_x_s2())
        throw std::invalid_argument("twisted candidates exist only for S^2 x S^2");
    std::vector<SurfaceComponent> comps;
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b)
            if (auto g = adjunction_genus_if({a, b}, s))
                comps.push_back({*g, H2Class(a, b)});

    // Large enough that every candidate stays inside the cone.
    const Rational L(1000 * (bound + 1) * (max_walls + 1));
    const H2Class omega0 =
        (s.trivial() || s.genus() >= 1) ? H2Class(L, L) : H2Class(Rational(2 * L), L);

    std::vector<ActionData> out;
    std::vector<std::size_t> idx;
    auto emit = [&]() {
        const long k = static_cast<long>(idx.size());
        const Rational T(k + 1);
        std::vector<H2Class> cum(k + 1);
        for (long i = 1; i <= k; ++i)
            cum[i] = cum[i - 1] + comps[idx[i - 1]].dual;
        H2Class total;
        for (const auto& c : cum)
            total += c;
        Rational cu = -total.cu() / T, cv = -total.cv() / T;
        H2Class e0 = H2Class(Rational(floor(cu)), Rational(floor(cv)));

        ActionData d;
        d.surface = s;
        d.twisted = twisted;
        d.domain = {DomainKind::Circle, Rational(0), T};
        if (twisted)
            d.seam = T;
        H2Class omega = omega0;
        for (long i = 0; i <= k; ++i) {
            H2Class e = e0 + cum[i];
            d.pieces.push_back(
                LinearClassPath::from_class(Rational(i), Rational(i + 1), omega, e));
            omega = d.pieces.back().omega(Rational(i + 1));
            if (i < k)
                d.walls.push_back({Rational(i + 1), {comps[idx[i]]}});
        }
        out.push_back(std::move(d));
    };
    std::function<void(int)> rec = [&](int depth) {
        if (depth > 0)
            emit();
        if (depth == max_walls)
            return;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            idx.push_back(i);
            rec(depth + 1);
            idx.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace semifree
