#include <doctest.h>

#include "semifree/constraints.hpp"

#include <set>

using namespace semifree;

namespace {

std::set<std::pair<long, long>> as_pairs(const std::vector<H2Class>& xs)
{
    std::set<std::pair<long, long>> out;
    for (const auto& x : xs)
        out.insert({to_long(x.cu()), to_long(x.cv())});
    return out;
}

} // namespace

TEST_CASE("solve_duals on S^2 x S^2")
{
    RuledSurface s(Bundle::Trivial, 0);
    auto duals = solve_duals(s, 0, {1, 1}, 2);
    std::set<std::pair<long, long>> expected{{1, 0}, {1, 1}, {1, 2}, {0, 1}, {2, 1}};
    CHECK(as_pairs(duals) == expected);
    CHECK(std::is_sorted(duals.begin(), duals.end()));
    CHECK(solve_duals(s, 1, {1, 1}, 3) == std::vector<H2Class>{{2, 2}});
}

TEST_CASE("solve_duals in the degenerate case g_i = g")
{
    RuledSurface s(Bundle::Trivial, 2);
    // (a + 1)(b - 1) = 0 : the fiber-like line b = 1 and the section-like line a = -1.
    auto duals = solve_duals(s, 2, {3, 1}, 3);
    for (const auto& d : duals) {
        CHECK((d.cu() == -1 || d.cv() == 1));
        CHECK(positivity(d, {3, 1}, s));
    }
    CHECK(as_pairs(duals).count({0, 1}) == 1);
    CHECK(as_pairs(duals).count({-1, 1}) == 1);
    CHECK(as_pairs(duals).count({-1, 2}) == 1);
    CHECK(as_pairs(duals).count({-1, -1}) == 0);
}

TEST_CASE("solve_duals on the nontrivial bundle")
{
    RuledSurface s(Bundle::Nontrivial, 1);
    for (const auto& d : solve_duals(s, 3, {5, 2}, 6)) {
        CHECK(adjunction_genus(d, s) == 3);
        CHECK(intersection(d, {5, 2}, s) > 0);
    }
    CHECK_FALSE(solve_duals(s, 1, {5, 2}, 4).empty());
}

TEST_CASE("extremal Euler classes")
{
    RuledSurface s22(Bundle::Trivial, 0);
    CHECK(extremal_euler(s22, {End::Min, 0, 0, false}) == H2Class(0, -1));
    CHECK(extremal_euler(s22, {End::Min, 0, 4, false}) == H2Class(2, -1));
    for (long N = 0; N <= 6; ++N)
        CHECK(extremal_euler(s22, {End::Max, 0, -2 * N, false}) == H2Class(N, 1));
    CHECK(extremal_euler(s22, {End::Max, 0, 2, true}) == H2Class(1, -1));
    CHECK_THROWS_AS(extremal_euler(s22, {End::Min, 0, 1, false}), ParityMismatch);

    RuledSurface odd(Bundle::Nontrivial, 0);
    CHECK(extremal_euler(odd, {End::Min, 0, 1, false}) == H2Class(0, -1));
    CHECK(extremal_euler(odd, {End::Min, 0, -1, false}) == H2Class(-1, -1));
    CHECK_THROWS_AS(extremal_euler(odd, {End::Max, 0, 2, false}), ParityMismatch);
    CHECK_THROWS_AS(extremal_euler(odd, {End::Max, 0, 1, true}), std::invalid_argument);
    CHECK_THROWS_AS(extremal_euler(RuledSurface(Bundle::Trivial, 1), {End::Max, 1, 0, true}),
                    std::invalid_argument);
}

TEST_CASE("interior spheres")
{
    CHECK(interior_sphere_rule({1, 3}, RuledSurface(Bundle::Trivial, 0)));
    CHECK(interior_sphere_rule({1, 0}, RuledSurface(Bundle::Trivial, 2)));
    CHECK_FALSE(interior_sphere_rule({-1, 2}, RuledSurface(Bundle::Trivial, 1)));
    CHECK_FALSE(interior_sphere_rule({0, 1}, RuledSurface(Bundle::Nontrivial, 1)));
}

TEST_CASE("side of the diagonal")
{
    CHECK(side_of({1, 2}) == Side::CBelowD);
    CHECK(side_of({2, 2}) == Side::Equal);
    CHECK(side_of({3, 2}) == Side::CAboveD);
}

TEST_CASE("classify surfaces")
{
    RuledSurface t1(Bundle::Trivial, 1);
    auto ok = classify_component(SurfaceComponent{1, {0, 2}}, t1, {2, 1}, Position::Interior);
    CHECK(ok.pass);
    CHECK(ok.rule.empty());
    CHECK_FALSE(ok.facts.empty());

    auto wrong_genus = classify_component(SurfaceComponent{0, {0, 2}}, t1, {2, 1}, Position::Interior);
    CHECK(wrong_genus.rule == "adjunction");

    auto fractional = classify_component(SurfaceComponent{0, {make_rational(1, 2), 0}}, t1, {2, 1},
                                         Position::Interior);
    CHECK(fractional.rule == "integral-dual");

    RuledSurface n1(Bundle::Nontrivial, 1);
    auto exceptional =
        classify_component(SurfaceComponent{0, {0, -1}}, n1, {3, 1}, Position::Interior);
    CHECK(exceptional.rule == "minimality");

    RuledSurface s22(Bundle::Trivial, 0);
    auto negative_area =
        classify_component(SurfaceComponent{0, {1, -1}}, s22, {2, 1}, Position::Interior);
    CHECK(negative_area.rule == "positivity");

    auto off_fiber =
        classify_component(SurfaceComponent{0, {-1, 2}}, t1, {3, 1}, Position::Interior);
    CHECK(off_fiber.rule == "interior-sphere-degree");

    // a < 0 is allowed on S^2 x S^2 while c > d.
    auto above = classify_component(SurfaceComponent{0, {-1, 1}}, s22, {3, 1}, Position::Interior);
    CHECK(above.pass);
    auto below = classify_component(SurfaceComponent{0, {-1, 1}}, s22, {1, 3}, Position::Interior);
    CHECK(below.rule == "positivity");
    CHECK(classify_component(SurfaceComponent{0, {1, 0}}, s22, {1, 3}, Position::Interior).pass);
}

TEST_CASE("classify isolated points and extrema")
{
    RuledSurface s22(Bundle::Trivial, 0);
    auto pt = classify_component(IsolatedPoint{1, 1, 1}, s22, {2, 1}, Position::Interior);
    CHECK(pt.pass);
    REQUIRE_FALSE(pt.facts.empty());
    CHECK(pt.facts.back().find("drops by 1") != std::string::npos);

    auto pt_min = classify_component(IsolatedPoint{1, 1, 1}, s22, {2, 1}, Position::Min);
    CHECK(pt_min.rule == "isolated-extremum");

    RuledSurface t2(Bundle::Trivial, 2);
    CHECK(classify_component(SurfaceComponent{2, {0, 1}}, t2, {3, 1}, Position::Max).pass);
    CHECK(classify_component(SurfaceComponent{1, {0, 1}}, t2, {3, 1}, Position::Max).rule ==
          "extremal-genus");
}
