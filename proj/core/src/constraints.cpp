#include "semifree/constraints.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace semifree {

std::string to_string(const FixedComponent& c)
{
    if (const auto* s = std::get_if<SurfaceComponent>(&c))
        return "surface of genus " + std::to_string(s->genus) + " dual " + to_string(s->dual);
    const auto& p = std::get<IsolatedPoint>(c);
    return "isolated point (" + std::to_string(p.p) + ", " + std::to_string(p.q) + ", -" +
           std::to_string(p.r) + ")";
}

bool positivity(const H2Class& dual, const H2Class& w, const RuledSurface& s)
{
    return intersection(dual, w, s) > 0;
}

namespace {

std::vector<long> signed_divisors(long n)
{
    std::vector<long> out;
    long m = std::labs(n);
    for (long k = 1; k * k <= m; ++k) {
        if (m % k != 0)
            continue;
        for (long d : {k, m / k}) {
            out.push_back(d);
            out.push_back(-d);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

std::vector<H2Class> solve_duals(const RuledSurface& s, long g_i, const H2Class& w, long bound)
{
    const long g = s.genus();
    std::set<std::pair<long, long>> found;
    auto offer = [&](long a, long b) {
        if (std::labs(a) <= bound && std::labs(b) <= bound && positivity({a, b}, w, s))
            found.insert({a, b});
    };

    if (s.trivial()) {
        // (a - (1-g)) (b - 1) = g_i - g
        const long n = g_i - g;
        if (n == 0) {
            for (long t = -bound; t <= bound; ++t) {
                offer(1 - g, t);
                offer(t, 1);
            }
        } else {
            for (long x : signed_divisors(n))
                offer(x + 1 - g, n / x + 1);
        }
    } else {
        // With alpha = a - b/2: (alpha - (1-g)) (b - 1) = g_i - g. Doubling,
        // X = 2a - b - 2 + 2g and Y = b - 1 satisfy X Y = 2 (g_i - g), and a is
        // integral exactly when X and Y have opposite parity.
        const long n2 = 2 * (g_i - g);
        auto from_xy = [&](long x, long y) {
            long b = y + 1;
            long twice_a = x + b + 2 - 2 * g;
            if (twice_a % 2 == 0)
                offer(twice_a / 2, b);
        };
        if (n2 == 0) {
            for (long t = -bound; t <= bound; ++t) {
                offer(t, 1);
                if (t % 2 == 0)
                    from_xy(0, t - 1);
            }
        } else {
            for (long x : signed_divisors(n2))
                from_xy(x, n2 / x);
        }
    }

    std::vector<H2Class> out;
    for (const auto& [a, b] : found)
        out.emplace_back(a, b);
    return out;
}

H2Class extremal_euler(const RuledSurface& s, const ExtremalAnnotation& ann)
{
    const bool even = ann.normal_chern % 2 == 0;
    if (even != s.trivial())
        throw ParityMismatch("normal Chern number " + std::to_string(ann.normal_chern) + " is " +
                             (even ? "even" : "odd") + " but the reduced space " + describe(s) +
                             " needs " + (s.trivial() ? "even" : "odd"));
    const long k = to_long(Rational(floor(make_rational(ann.normal_chern, 2))));
    if (ann.end == End::Min)
        return {k, -1};
    if (ann.twisted_branch) {
        if (!s.is_s2_x_s2())
            throw std::invalid_argument("the twisted maximum branch exists only on S^2 x S^2");
        return {1, -k};
    }
    return {-k, 1};
}

bool interior_sphere_rule(const H2Class& dual, const RuledSurface& s)
{
    return s.genus() == 0 || dual.cv() == 0;
}

Side side_of(const H2Class& w)
{
    if (w.cu() < w.cv())
        return Side::CBelowD;
    if (w.cu() > w.cv())
        return Side::CAboveD;
    return Side::Equal;
}

namespace {

ComponentFacts fail(ComponentFacts facts, std::string rule, std::string detail)
{
    facts.pass = false;
    facts.rule = std::move(rule);
    facts.detail = std::move(detail);
    return facts;
}

ComponentFacts classify_surface(const SurfaceComponent& comp, const RuledSurface& s,
                                const H2Class& w)
{
    ComponentFacts facts;
    const H2Class& D = comp.dual;
    if (!D.is_integral())
        return fail(facts, "integral-dual", "dual " + to_string(D) + " is not integral");
    if (comp.genus < 0)
        return fail(facts, "adjunction", "negative genus");

    auto genus = adjunction_genus_if(D, s);
    if (genus != comp.genus)
        return fail(facts, "adjunction",
                    "dual " + to_string(D) + " has adjunction genus " +
                        (genus ? std::to_string(*genus) : std::string("(none)")) +
                        " but the surface has genus " + std::to_string(comp.genus));
    facts.facts.push_back("adjunction genus " + std::to_string(comp.genus));

    if (s.genus() >= 1 && comp.genus == 0 && intersection(D, D, s) == -1)
        return fail(facts, "minimality",
                    "exceptional sphere " + to_string(D) + " in the irrational ruled surface " +
                        describe(s));

    if (!positivity(D, w, s))
        return fail(facts, "positivity",
                    "area of " + to_string(D) + " against " + to_string(w) + " is " +
                        to_string(intersection(D, w, s)));
    facts.facts.push_back("positive area " + to_string(intersection(D, w, s)));

    if (comp.genus == 0 && !interior_sphere_rule(D, s))
        return fail(facts, "interior-sphere-degree",
                    "an interior sphere maps with degree zero to the base, so b must be 0, got " +
                        to_string(D.cv()));

    const Rational& a = D.cu();
    const Rational& b = D.cv();
    if (s.genus() >= 1 || !s.trivial()) {
        if (b < 0)
            return fail(facts, "sign", "b = " + to_string(b) + " must be nonnegative");
        facts.facts.push_back("b >= 0");
    } else {
        switch (side_of(w)) {
        case Side::CBelowD:
            if (a < 0)
                return fail(facts, "sign", "c < d at the wall needs a >= 0");
            facts.facts.push_back("a >= 0 (c < d)");
            break;
        case Side::CAboveD:
            if (b < 0)
                return fail(facts, "sign", "c > d at the wall needs b >= 0");
            facts.facts.push_back("b >= 0 (c > d)");
            break;
        case Side::Equal:
            if (a < 0 || b < 0)
                return fail(facts, "sign", "c = d at the wall needs a, b >= 0");
            facts.facts.push_back("a, b >= 0 (c = d)");
            break;
        }
    }
    return facts;
}

} // namespace

ComponentFacts classify_component(const FixedComponent& comp, const RuledSurface& s,
                                  const H2Class& w, Position position)
{
    ComponentFacts facts;
    if (const auto* iso = std::get_if<IsolatedPoint>(&comp)) {
        if (position != Position::Interior)
            return fail(facts, "isolated-extremum",
                        "an extremum of a semifree action here is a surface, not a point");
        if (iso->p <= 0 || iso->q <= 0 || iso->r <= 0)
            return fail(facts, "weights", "isolated point weights must be positive");
        Integer pqr = Integer(iso->p) * iso->q * iso->r;
        facts.facts.push_back("integral of e^2 drops by " +
                              to_string(make_rational(Integer(1), pqr)));
        return facts;
    }
    const auto& surf = std::get<SurfaceComponent>(comp);
    if (position != Position::Interior) {
        if (surf.genus != s.genus())
            return fail(facts, "extremal-genus",
                        "extremal surface has genus " + std::to_string(surf.genus) +
                            " but the base has genus " + std::to_string(s.genus()));
        facts.facts.push_back("extremal surface of the base genus");
        return facts;
    }
    return classify_surface(surf, s, w);
}

} // namespace semifree
