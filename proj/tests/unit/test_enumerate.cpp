#include <doctest.h>

#include "semifree/classifier.hpp"

using namespace semifree;

TEST_CASE("S^2 x S^2 has at most one positive-genus surface")
{
    EnumerationOptions opt;
    opt.bound = 4;
    opt.max_walls = 3;
    EnumerationResult r = enumerate_configurations(RuledSurface(Bundle::Trivial, 0), opt);
    CHECK_FALSE(r.configurations.empty());
    CHECK(r.max_total <= 1);
    CHECK(r.totals.count(0) == 1);
    CHECK(r.totals.count(1) == 1);
    CHECK(r.rejections.count("adjunction") == 1);
}

TEST_CASE("configurations satisfy the sum rule")
{
    EnumerationOptions opt;
    opt.bound = 3;
    opt.max_walls = 3;
    for (auto s : {RuledSurface(Bundle::Trivial, 0), RuledSurface(Bundle::Trivial, 1),
                   RuledSurface(Bundle::Nontrivial, 0)}) {
        CAPTURE(describe(s));
        EnumerationResult r = enumerate_configurations(s, opt);
        for (const auto& c : r.configurations) {
            Rational sum_b = 0;
            int positive = 0;
            for (const auto& w : c.walls) {
                for (const auto& comp : w.components) {
                    sum_b += comp.dual.cv();
                    positive += comp.genus >= 1;
                    CHECK(adjunction_genus(comp.dual, s) == comp.genus);
                }
            }
            CHECK(sum_b == 2);
            CHECK(positive == c.interior_positive);
            CHECK(c.total_positive <= 4);
        }
    }
}

TEST_CASE("search order and threads do not change the result")
{
    RuledSurface s(Bundle::Trivial, 1);
    EnumerationOptions opt;
    opt.bound = 4;
    opt.max_walls = 3;
    EnumerationResult base = enumerate_configurations(s, opt);
    for (std::uint64_t seed : {1u, 99u, 12345u}) {
        EnumerationOptions shuffled = opt;
        shuffled.shuffle_seed = seed;
        CHECK(enumerate_configurations(s, shuffled).configurations == base.configurations);
    }
    EnumerationOptions threaded = opt;
    threaded.threads = 4;
    EnumerationResult t = enumerate_configurations(s, threaded);
    CHECK(t.configurations == base.configurations);
    CHECK(t.totals == base.totals);
}

TEST_CASE("bad options")
{
    EnumerationOptions opt;
    opt.bound = 0;
    CHECK_THROWS_AS(enumerate_configurations(RuledSurface(Bundle::Trivial, 0), opt),
                    std::invalid_argument);
}

TEST_CASE("too small a bound is reported")
{
    EnumerationOptions opt;
    opt.bound = 1;
    opt.max_walls = 1;
    opt.max_per_wall = 1;
    CHECK_THROWS_AS(enumerate_configurations(RuledSurface(Bundle::Nontrivial, 3), opt),
                    SearchBoundTooSmall);
}
