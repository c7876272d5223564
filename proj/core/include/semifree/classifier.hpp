#pragma once

#include "semifree/constraints.hpp"
#include "semifree/dh.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace semifree {

struct Wall {
    Rational s;
    std::vector<FixedComponent> components;

    bool operator==(const Wall&) const = default;
};

enum class DomainKind { Interval, Circle };

/// Interval [t0, t1], or the circle obtained by identifying t0 with t1.
struct Domain {
    DomainKind kind = DomainKind::Interval;
    Rational t0{0};
    Rational t1{1};

    bool operator==(const Domain&) const = default;
};

struct ActionData {
    RuledSurface surface{Bundle::Trivial, 0};
    bool twisted = false;
    Domain domain;
    std::optional<Rational> seam; ///< marked regular value where the swap is applied
    std::vector<LinearClassPath> pieces;
    std::vector<Wall> walls;
    std::optional<ExtremalAnnotation> min;
    std::optional<ExtremalAnnotation> max;

    bool operator==(const ActionData&) const = default;
    bool has_fixed_points() const;
};

/// Tiling or ordering defect that makes the document meaningless.
struct MalformedDocument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Violation {
    std::string rule;
    std::string location;
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<std::string> notes;
    std::optional<PiecewisePoly> dh;

    bool pass() const { return violations.empty(); }
};

/// Throws MalformedDocument on tiling defects; everything else is reported.
ValidationReport validate_action_data(const ActionData& data);

/// [omega_s] at a wall, taken from the piece ending there.
H2Class omega_at_wall(const ActionData& data, const Wall& wall);

enum class Certificate { None, ZeroSum, ZeroSum2, MinSlopeMonotonicity, DhLogConcavity };

std::string to_string(Certificate c);

struct HamiltonianVerdict {
    enum class Outcome { Inconsistent, ConsistentCandidate, InvalidData };
    Outcome outcome = Outcome::InvalidData;
    Certificate certificate = Certificate::None;
    std::string detail;

    std::string summary() const;
};

/// Circle-domain data only; throws std::invalid_argument otherwise.
HamiltonianVerdict decide_hamiltonian(const ActionData& data);

/// The input breaks a counting theorem, so it cannot come from an actual action.
struct TheoremViolation : std::domain_error {
    using std::domain_error::domain_error;
};

struct PositiveGenusCount {
    int count = 0;
    bool all_base_genus = true;
};

/// Counts fixed surfaces of positive genus, extrema included. Throws TheoremViolation
/// unless the count is in {0, 1, 3, 4} with all four genera equal to the base genus.
PositiveGenusCount count_positive_genus(const ActionData& data);

struct EnumerationOptions {
    long bound = 4;
    int max_walls = 3;
    int max_per_wall = 2;
    unsigned threads = 1;
    std::optional<std::uint64_t> shuffle_seed; ///< permute the search order
};

struct EnumeratedComponent {
    long genus = 0;
    H2Class dual;

    auto operator<=>(const EnumeratedComponent& o) const
    {
        if (genus != o.genus)
            return genus <=> o.genus;
        if (dual == o.dual)
            return std::strong_ordering::equal;
        return dual < o.dual ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    bool operator==(const EnumeratedComponent& o) const { return genus == o.genus && dual == o.dual; }
};

struct EnumeratedWall {
    std::vector<EnumeratedComponent> components; ///< sorted
    Rational witness_ratio;                      ///< [omega_s] proportional to r u + v
    std::optional<Side> side;                    ///< trivial g = 0 only
    Rational min_drop{0};                        ///< lower bound for the min-slope drop

    bool operator==(const EnumeratedWall& o) const { return components == o.components; }
    bool operator<(const EnumeratedWall& o) const { return components < o.components; }
};

struct Configuration {
    std::vector<EnumeratedWall> walls; ///< sorted multiset
    int interior_positive = 0;
    int total_positive = 0; ///< interior plus the two extrema
    bool all_base_genus = true;

    bool operator<(const Configuration& o) const { return walls < o.walls; }
    bool operator==(const Configuration& o) const { return walls == o.walls; }
};

struct EnumerationResult {
    std::vector<Configuration> configurations; ///< sorted
    std::set<int> totals;
    int max_total = 0;
    bool four_all_base_genus = true;
    std::map<std::string, long> rejections; ///< rule name -> number of pruned candidates
    std::size_t candidate_count = 0;
    std::size_t wall_count = 0;
};

struct SearchBoundTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Untwisted configurations of interior fixed surfaces with sum of b equal to 2.
EnumerationResult enumerate_configurations(const RuledSurface& s, const EnumerationOptions& opt);

/// Closed-loop candidate documents: every sequence of at most max_walls walls with
/// one surface each, duals in [-bound, bound]^2 of nonnegative adjunction genus,
/// walls at t = 1..k on the circle [0, k+1].
std::vector<ActionData> circle_candidates(const RuledSurface& s, long bound, int max_walls,
                                          bool twisted = false);

} // namespace semifree
