#include <doctest.h>

#include "semifree/action_file.hpp"
#include "semifree/classifier.hpp"

#include <algorithm>

using namespace semifree;

namespace {

ActionData shipped(const std::string& name)
{
    return load_action_file(std::string(SEMIFREE_DATA_DIR) + "/" + name);
}

ActionData fixture(const std::string& name)
{
    return load_action_file(std::string(SEMIFREE_TEST_DATA) + "/" + name);
}

bool has_rule(const ValidationReport& r, const std::string& rule)
{
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [&](const Violation& v) { return v.rule == rule; });
}

} // namespace

TEST_CASE("shipped examples validate")
{
    for (const char* name : {"example_7_2.act", "example_7_4.act", "sphere_extrema_torus.act"}) {
        CAPTURE(name);
        ValidationReport r = validate_action_data(shipped(name));
        for (const auto& v : r.violations)
            MESSAGE(v.rule << " @ " << v.location << ": " << v.detail);
        CHECK(r.pass());
        CHECK(r.dh.has_value());
    }
}

TEST_CASE("positive-genus counts")
{
    auto c72 = count_positive_genus(shipped("example_7_2.act"));
    CHECK(c72.count == 4);
    CHECK(c72.all_base_genus);
    CHECK(count_positive_genus(shipped("example_7_4.act")).count == 0);
    CHECK(count_positive_genus(shipped("sphere_extrema_torus.act")).count == 1);
}

TEST_CASE("count 2 is reported as invalid input")
{
    ActionData data = fixture("two_positive.act");
    CHECK(has_rule(validate_action_data(data), "interior-sphere-degree"));
    try {
        count_positive_genus(data);
        FAIL("expected TheoremViolation");
    } catch (const TheoremViolation& e) {
        std::string what = e.what();
        CHECK(what.find("not a counterexample") != std::string::npos);
        CHECK(what.find("interior-sphere-degree") != std::string::npos);
    }
}

TEST_CASE("broken variants are rejected")
{
    CHECK(has_rule(validate_action_data(fixture("example_7_2_wrong_dual.act")), "euler-jump"));
    ValidationReport flip = validate_action_data(fixture("slope_flip.act"));
    CHECK_FALSE(flip.pass());
    CHECK(has_rule(flip, "slope-law"));
}

TEST_CASE("omega at a wall")
{
    ActionData data = shipped("example_7_4.act");
    REQUIRE(data.walls.size() == 2);
    CHECK(omega_at_wall(data, data.walls[0]) == H2Class(6, 2));
    CHECK(omega_at_wall(data, data.walls[1]) == H2Class(6, 1));
}

TEST_CASE("tiling defects throw")
{
    ActionData data = shipped("example_7_4.act");
    ActionData gap = data;
    gap.pieces[1] = LinearClassPath::from_class(make_rational(5, 2), 3, {6, 2}, {0, 1});
    CHECK_THROWS_AS(validate_action_data(gap), MalformedDocument);

    ActionData missing_wall = data;
    missing_wall.walls.pop_back();
    CHECK_THROWS_AS(validate_action_data(missing_wall), MalformedDocument);

    ActionData stray = data;
    stray.walls.push_back({make_rational(7, 2), {SurfaceComponent{0, {1, 0}}}});
    CHECK_THROWS_AS(validate_action_data(stray), MalformedDocument);
}

TEST_CASE("extremal Euler mismatch")
{
    ActionData data = shipped("example_7_4.act");
    data.max->normal_chern = -8;
    CHECK(has_rule(validate_action_data(data), "extremal-euler"));
    data.max->normal_chern = -9;
    CHECK(has_rule(validate_action_data(data), "extremal-parity"));
}

TEST_CASE("Hamiltonian verdicts")
{
    HamiltonianVerdict one = decide_hamiltonian(fixture("circle_one_sphere.act"));
    CHECK(one.outcome == HamiltonianVerdict::Outcome::Inconsistent);
    CHECK(one.certificate == Certificate::ZeroSum);
    CHECK(one.summary().find("zerosum") != std::string::npos);

    HamiltonianVerdict free = decide_hamiltonian(shipped("free_circle.act"));
    CHECK(free.outcome == HamiltonianVerdict::Outcome::ConsistentCandidate);
    CHECK(free.certificate == Certificate::None);

    CHECK_THROWS_AS(decide_hamiltonian(shipped("example_7_2.act")), std::invalid_argument);
}

TEST_CASE("every bounded circle candidate is refuted")
{
    for (auto s : {RuledSurface(Bundle::Trivial, 0), RuledSurface(Bundle::Trivial, 1),
                   RuledSurface(Bundle::Nontrivial, 0), RuledSurface(Bundle::Nontrivial, 1)}) {
        CAPTURE(describe(s));
        auto candidates = circle_candidates(s, 2, 2, false);
        CHECK_FALSE(candidates.empty());
        for (const auto& c : candidates) {
            HamiltonianVerdict v = decide_hamiltonian(c);
            CHECK(v.outcome == HamiltonianVerdict::Outcome::Inconsistent);
            CHECK(v.certificate != Certificate::None);
        }
    }
}

TEST_CASE("twisted circle data needs a seam on S^2 x S^2")
{
    ActionData data = shipped("free_circle.act");
    data.surface = RuledSurface(Bundle::Trivial, 0);
    CHECK(validate_action_data(data).pass());
    data.twisted = true;
    CHECK_THROWS_AS(validate_action_data(data), MalformedDocument);
}
