#include "semifree/homology.hpp"

#include <algorithm>
#include <sstream>

namespace semifree {

std::string to_string(Bundle b) { return b == Bundle::Trivial ? "trivial" : "nontrivial"; }

RuledSurface::RuledSurface(Bundle bundle, int genus) : bundle_(bundle), genus_(genus)
{
    if (genus < 0)
        throw std::invalid_argument("base genus must be nonnegative");
}

std::string describe(const RuledSurface& s)
{
    std::ostringstream os;
    if (s.trivial())
        os << "Sigma_" << s.genus() << " x S^2";
    else
        os << "E_Sigma_" << s.genus() << " (nontrivial)";
    return os.str();
}

H2Class H2Class::integral(const Rational& cu, const Rational& cv)
{
    if (!is_integer(cu) || !is_integer(cv))
        throw std::invalid_argument("class " + to_string(cu) + "u + " + to_string(cv) +
                                    "v is not integral");
    return {cu, cv};
}

bool H2Class::is_integral() const { return is_integer(cu_) && is_integer(cv_); }

H2Class& H2Class::operator+=(const H2Class& o)
{
    cu_ += o.cu_;
    cv_ += o.cv_;
    return *this;
}

std::string to_string(const H2Class& x)
{
    return "(" + to_string(x.cu()) + ")u + (" + to_string(x.cv()) + ")v";
}

H2Class swapped(const H2Class& x) { return {x.cv(), x.cu()}; }

Rational intersection(const H2Class& x, const H2Class& y, const RuledSurface& s)
{
    Rational r = x.cu() * y.cu() * s.uu() + (x.cu() * y.cv() + x.cv() * y.cu()) * s.uv() +
                 x.cv() * y.cv() * s.vv();
    return r;
}

H2Class chern_class(const RuledSurface& s)
{
    long g = s.genus();
    return s.trivial() ? H2Class(2 - 2 * g, 2) : H2Class(3 - 2 * g, 2);
}

std::optional<long> adjunction_genus_if(const H2Class& dual, const RuledSurface& s)
{
    if (!dual.is_integral())
        throw std::invalid_argument("adjunction genus needs an integral class, got " +
                                    to_string(dual));
    Rational lhs = intersection(dual, dual, s) - intersection(chern_class(s), dual, s);
    Rational twice_genus = lhs + 2;
    if (twice_genus < 0)
        return std::nullopt;
    Integer n = twice_genus.get_num();
    if (n % 2 != 0)
        return std::nullopt;
    Integer g = n / 2;
    if (!g.fits_slong_p())
        return std::nullopt;
    return g.get_si();
}

long adjunction_genus(const H2Class& dual, const RuledSurface& s)
{
    auto g = adjunction_genus_if(dual, s);
    if (!g)
        throw NonRepresentable("class " + to_string(dual) +
                               " has no nonnegative integral adjunction genus on " + describe(s));
    return *g;
}

H2Class IsometryMatrix::pullback(const H2Class& x) const
{
    return {x.cu() * a + x.cv() * c, x.cu() * b + x.cv() * d};
}

bool IsometryMatrix::preserves_form(const RuledSurface& s) const
{
    H2Class pu = pullback({1, 0});
    H2Class pv = pullback({0, 1});
    return intersection(pu, pu, s) == s.uu() && intersection(pv, pv, s) == s.vv() &&
           intersection(pu, pv, s) == s.uv();
}

std::string to_string(const IsometryMatrix& m)
{
    std::ostringstream os;
    os << "(" << m.a << "," << m.b << "," << m.c << "," << m.d << ")";
    return os.str();
}

H2ActionSets h2_symplectomorphism_actions(const RuledSurface& s)
{
    constexpr long search = 3;
    H2ActionSets out;
    for (long a = -search; a <= search; ++a)
        for (long b = -search; b <= search; ++b)
            for (long c = -search; c <= search; ++c)
                for (long d = -search; d <= search; ++d) {
                    IsometryMatrix m{a, b, c, d};
                    if (m.preserves_form(s))
                        out.stage1.push_back(m);
                }
    for (const auto& m : out.stage1) {
        long biggest = std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
        if (biggest >= search)
            throw std::logic_error("isometry search touched its bound at " + to_string(m));
    }

    const H2Class u{1, 0}, v{0, 1};
    const long genus_u = adjunction_genus(u, s);
    const long genus_v = adjunction_genus(v, s);
    for (const auto& m : out.stage1) {
        H2Class pu = m.pullback(u);
        H2Class pv = m.pullback(v);
        RatioInterval fiber = cone_ratios(s);
        fiber.require_positive(intersection(pu, v, s), intersection(pu, u, s));
        if (fiber.empty())
            continue;
        if (adjunction_genus_if(pu, s) != genus_u || adjunction_genus_if(pv, s) != genus_v)
            continue;
        out.final_set.push_back(m);
    }
    return out;
}

void RatioInterval::require_positive(const Rational& constant, const Rational& slope)
{
    if (slope == 0) {
        if (constant <= 0)
            hi = lo; // empty
        return;
    }
    Rational root = -constant / slope;
    if (slope > 0) {
        if (root > lo)
            lo = root;
    } else if (!hi || root < *hi) {
        hi = root;
    }
}

Rational RatioInterval::sample() const
{
    if (empty())
        throw std::logic_error("sample of an empty ratio interval");
    if (!hi)
        return lo + 1;
    Rational mid = (lo + *hi) / 2;
    return mid;
}

std::vector<ConeCondition> cone_conditions(const RuledSurface& s)
{
    if (s.trivial())
        return {{1, 0, "c > 0"}, {0, 1, "d > 0"}};
    if (s.genus() == 0)
        return {{1, -1, "c > d"}, {0, 1, "d > 0"}};
    return {{2, -1, "2c > d"}, {0, 1, "d > 0"}};
}

RatioInterval cone_ratios(const RuledSurface& s)
{
    RatioInterval r;
    for (const auto& cond : cone_conditions(s))
        r.require_positive(cond.on_d, cond.on_c);
    return r;
}

ConeVerdict symplectic_cone_test(const H2Class& w, const RuledSurface& s)
{
    ConeVerdict v;
    v.certainty = (!s.trivial() && s.genus() >= 1) ? ConeCertainty::NecessaryOnly
                                                    : ConeCertainty::Exact;
    v.inside = true;
    for (const auto& cond : cone_conditions(s)) {
        Rational value = cond.on_c * w.cu() + cond.on_d * w.cv();
        if (value <= 0) {
            v.inside = false;
            v.reason = "violates " + cond.text;
            break;
        }
    }
    if (v.inside)
        v.reason = "satisfies all cone inequalities";
    if (v.certainty == ConeCertainty::NecessaryOnly)
        v.reason += " (necessary-only)";
    return v;
}

} // namespace semifree
