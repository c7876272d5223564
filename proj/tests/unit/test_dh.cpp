#include <doctest.h>

#include "semifree/dh.hpp"

#include <random>

using namespace semifree;

TEST_CASE("evolve_omega")
{
    CHECK(evolve_omega({5, 0}, {0, -1}, 0, make_rational(3, 2)) == H2Class(5, make_rational(3, 2)));
    CHECK(evolve_omega({7, 3}, {2, -9}, 4, 4) == H2Class(7, 3));
    const long N = 5;
    CHECK(evolve_omega({N + 1, 2}, {0, 1}, 2, 3) == H2Class(N + 1, 1));
}

TEST_CASE("cross_wall_euler")
{
    std::vector<H2Class> two_v{{0, 2}};
    CHECK(cross_wall_euler({0, -1}, two_v) == H2Class(0, 1));
    std::vector<H2Class> n_u{{5, 0}};
    CHECK(cross_wall_euler({0, 1}, n_u) == H2Class(5, 1));
    CHECK(cross_wall_euler({3, 4}, {}) == H2Class(3, 4));
    std::vector<H2Class> frac{{make_rational(1, 2), 0}};
    CHECK_THROWS_AS(cross_wall_euler({0, 0}, frac), std::invalid_argument);
}

TEST_CASE("isolated point drop")
{
    CHECK(isolated_euler_square_drop(0, 1, 1, 1) == -1);
    CHECK(isolated_euler_square_drop(make_rational(1, 2), 1, 2, 3) == make_rational(1, 3));
    CHECK(isolated_euler_square_drop(make_rational(7, 5), 1, 1, 1) == make_rational(2, 5));
    CHECK_THROWS_AS(isolated_euler_square_drop(0, 0, 1, 1), NonPositiveWeight);
    CHECK_THROWS_AS(isolated_euler_square_drop(0, 1, 1, -2), NonPositiveWeight);
}

TEST_CASE("class path invariants")
{
    CHECK_THROWS_AS(LinearClassPath(1, 1, {}, {}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(LinearClassPath(0, 1, {}, {}, {make_rational(1, 2), 0}), std::invalid_argument);
    auto p = LinearClassPath::from_class(2, 3, {6, 2}, {0, 1});
    CHECK(p.slope_law_holds());
    CHECK(p.omega(3) == H2Class(6, 1));
    RuledSurface s(Bundle::Trivial, 0);
    CHECK(p.in_cone(s));
    auto leaving = LinearClassPath::from_class(0, 3, {1, 1}, {1, 0});
    std::string why;
    CHECK_FALSE(leaving.in_cone(s, &why));
    CHECK(why.find("c > 0") != std::string::npos);
}

namespace {

std::vector<LinearClassPath> sphere_example_path(long N)
{
    return {LinearClassPath::from_class(0, 2, {N + 1, 0}, {0, -1}),
            LinearClassPath::from_class(2, 3, {N + 1, 2}, {0, 1}),
            LinearClassPath::from_class(3, 4, {N + 1, 1}, {N, 1})};
}

} // namespace

TEST_CASE("DH volume of the N-spheres example")
{
    const long N = 4;
    auto path = sphere_example_path(N);
    RuledSurface s(Bundle::Trivial, 0);
    PiecewisePoly f = dh_volume(path, s);
    for (int k = 0; k <= 16; ++k) {
        Rational t = make_rational(k, 4);
        Rational expected;
        if (t <= 2)
            expected = 2 * (N + 1) * t;
        else if (t <= 3)
            expected = 2 * (N + 1) * (4 - t);
        else
            expected = 2 * ((4 - t) * N + 1) * (4 - t);
        CHECK(f(t) == expected);
    }
    CHECK(f.continuous());
    CHECK(check_log_concave(f).pass());
    CHECK(*f.derivative_left(2) == 2 * (N + 1));
    CHECK(*f.derivative_right(2) == -2 * (N + 1));
}

TEST_CASE("DH volume on the nontrivial bundle is (2c - d) d")
{
    RuledSurface s(Bundle::Nontrivial, 1);
    std::vector<LinearClassPath> path{LinearClassPath::from_class(0, 1, {3, 1}, {1, -1})};
    PiecewisePoly f = dh_volume(path, s);
    for (int k = 0; k <= 4; ++k) {
        Rational t = make_rational(k, 4);
        Rational c = 3 - t, d = 1 + t;
        Rational expected = (2 * c - d) * d;
        CHECK(f(t) == expected);
    }
}

TEST_CASE("log-concavity verdicts")
{
    PiecewisePoly constant({0, 1}, {{5, 0, 0}});
    CHECK(check_log_concave(constant).pass());
    CHECK(check_log_concave(constant, true).pass());

    PiecewisePoly v_shape({0, 1, 2}, {{3, -1, 0}, {1, 1, 0}});
    auto report = check_log_concave(v_shape);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == LogConcavityViolation::Kind::KinkIncrease);
    CHECK(report.violations[0].at == 1);

    PiecewisePoly convex({1, 2}, {{0, 0, 1}}); // t^2: f''f - f'^2 = 2t^2 - 4t^2 < 0
    CHECK(check_log_concave(convex).pass());
    PiecewisePoly exp_like({0, 1}, {{1, 1, 1}}); // 2(1+t+t^2) - (1+2t)^2 = 1 - 2t - 2t^2
    auto r = check_log_concave(exp_like);
    REQUIRE_FALSE(r.pass());
    CHECK(r.violations[0].kind == LogConcavityViolation::Kind::PieceInequality);

    PiecewisePoly jump({0, 1, 2}, {{1, 0, 0}, {2, 0, 0}});
    CHECK(check_log_concave(jump).violations[0].kind == LogConcavityViolation::Kind::Discontinuity);

    PiecewisePoly negative({0, 2}, {{1, -1, 0}});
    CHECK_THROWS_AS(check_log_concave(negative), NonPositiveFunction);

    PiecewisePoly ramp({0, 1}, {{1, 1, 0}});
    CHECK(check_log_concave(ramp).pass());
    CHECK_FALSE(check_log_concave(ramp, true).pass());
}

TEST_CASE("min-slope step function")
{
    auto steps = min_slope(sphere_example_path(3));
    REQUIRE(steps.size() == 3);
    CHECK(steps[0].slope == 1);
    CHECK(steps[1].slope == -1);
    CHECK(steps[2].slope == -1);

    std::vector<WallMark> walls{{2, false}, {3, false}};
    MinSlopeReport report = check_min_slope_monotone(steps, walls);
    CHECK(report.pass());
    REQUIRE(report.drops.size() == 2);
    CHECK(report.drops[0].drop == 2);
    CHECK(report.drops[1].drop == 0);

    std::vector<LinearClassPath> crossing{LinearClassPath(0, 3, {1, 1}, {3, -1}, {-1, 1})};
    auto cs = min_slope(crossing);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].hi == 1);
    CHECK(cs[0].slope == 1);
    CHECK(cs[1].slope == -1);
    CHECK(cs[0].crossing_after);
    CHECK(check_min_slope_monotone(cs, {}).pass());

    std::vector<LinearClassPath> equal{LinearClassPath(0, 1, {1, 2}, {1, 2}, {-2, -2})};
    auto es = min_slope(equal);
    REQUIRE(es.size() == 1);
    CHECK(es[0].slope == 2);
}

TEST_CASE("min-slope violations")
{
    std::vector<SlopeStep> steps{{0, 1, 1, false}, {1, 2, 0, false}};
    std::vector<WallMark> genus_wall{{1, true}};
    MinSlopeReport r = check_min_slope_monotone(steps, genus_wall);
    REQUIRE_FALSE(r.pass());
    CHECK(r.violation->find("positive-genus") != std::string::npos);

    std::vector<SlopeStep> rising{{0, 1, -1, false}, {1, 2, 1, false}};
    std::vector<WallMark> plain{{1, false}};
    CHECK_FALSE(check_min_slope_monotone(rising, plain).pass());

    std::vector<SlopeStep> flat_cross{{0, 1, 1, true}, {1, 2, 1, false}};
    CHECK_FALSE(check_min_slope_monotone(flat_cross, {}).pass());

    std::vector<SlopeStep> loop{{0, 1, 1, false}, {1, 2, -1, false}};
    std::vector<WallMark> mid{{1, false}};
    CHECK(check_min_slope_monotone(loop, mid).pass());
    CHECK_FALSE(check_min_slope_monotone(loop, mid, true).pass());
}

TEST_CASE("property: evolve_omega reproduces from_class paths")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> n(-9, 9), den(1, 6);
    for (int i = 0; i < 500; ++i) {
        Rational r = make_rational(n(rng), den(rng));
        H2Class w(make_rational(n(rng), den(rng)), make_rational(n(rng), den(rng)));
        H2Class e(n(rng), n(rng));
        auto p = LinearClassPath::from_class(r, r + 2, w, e);
        CHECK(p.slope_law_holds());
        Rational t = r + make_rational(n(rng) + 10, 10);
        CHECK(p.omega(t) == evolve_omega(w, e, r, t));
    }
}

TEST_CASE("property: slope jump at a wall is -2 omega.D")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> n(-4, 4);
    for (auto s : {RuledSurface(Bundle::Trivial, 0), RuledSurface(Bundle::Nontrivial, 2)}) {
        for (int i = 0; i < 200; ++i) {
            H2Class w(20 + n(rng), 7 + n(rng));
            H2Class e(n(rng), n(rng));
            std::vector<H2Class> duals{{n(rng), n(rng)}, {n(rng), n(rng)}};
            H2Class e2 = cross_wall_euler(e, duals);
            std::vector<LinearClassPath> path{
                LinearClassPath::from_class(0, 1, w + e, e),
                LinearClassPath::from_class(1, 2, w, e2)};
            PiecewisePoly f = dh_volume(path, s);
            CHECK(*f.derivative_right(1) - *f.derivative_left(1) ==
                  predicted_slope_jump(w, duals, s));
        }
    }
}
