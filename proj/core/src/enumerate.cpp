#include "semifree/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

namespace semifree {

namespace {

struct Candidate {
    EnumeratedComponent comp;
    long a = 0, b = 0;
};

using Tally = std::map<std::string, long>;

std::vector<Candidate> candidates(const RuledSurface& s, long bound, Tally& tally)
{
    const long g = s.genus();
    const bool b_nonnegative = g >= 1 || !s.trivial();
    std::vector<Candidate> out;
    for (long a = -bound; a <= bound; ++a) {
        for (long b = -bound; b <= bound; ++b) {
            H2Class D(a, b);
            auto genus = adjunction_genus_if(D, s);
            if (!genus) {
                ++tally["adjunction"];
                continue;
            }
            if (g >= 1 && *genus == 0 && intersection(D, D, s) == -1) {
                ++tally["minimality"];
                continue;
            }
            if (*genus == 0 && !interior_sphere_rule(D, s)) {
                ++tally["interior-sphere-degree"];
                continue;
            }
            if (b_nonnegative && b < 0) {
                ++tally["sign"];
                continue;
            }
            RatioInterval r = cone_ratios(s);
            r.require_positive(intersection(D, {0, 1}, s), intersection(D, {1, 0}, s));
            if (r.empty()) {
                ++tally["positivity"];
                continue;
            }
            out.push_back({{*genus, D}, a, b});
        }
    }
    return out;
}

struct SideChoice {
    Side side;
    Rational ratio;
    Rational drop;
};

/// Feasible ratios of [omega_s] ~ r u + v for one wall; for S^2 x S^2 also the side of
/// c = d with the smallest forced min-slope drop.
std::optional<SideChoice> witness(const RuledSurface& s, const std::vector<const Candidate*>& wall,
                                  Tally& tally)
{
    RatioInterval r = cone_ratios(s);
    for (const auto* c : wall)
        r.require_positive(intersection(c->comp.dual, {0, 1}, s),
                           intersection(c->comp.dual, {1, 0}, s));
    if (r.empty()) {
        ++tally["no-witness"];
        return std::nullopt;
    }
    if (!s.is_s2_x_s2())
        return SideChoice{Side::CAboveD, r.sample(), Rational(0)};

    long sum_a = 0, sum_b = 0;
    bool a_ok = true, b_ok = true;
    bool positive_genus = false;
    for (const auto* c : wall) {
        sum_a += c->a;
        sum_b += c->b;
        a_ok = a_ok && c->a >= 0;
        b_ok = b_ok && c->b >= 0;
        positive_genus = positive_genus || c->comp.genus >= 1;
    }
    std::optional<SideChoice> best;
    auto consider = [&](Side side, RatioInterval interval, long drop, bool signs) {
        if (!signs || interval.empty())
            return;
        if (positive_genus && drop < 2)
            return;
        if (!best || Rational(drop) < best->drop)
            best = SideChoice{side, interval.sample(), Rational(drop)};
    };
    RatioInterval below = r;
    below.require_positive(1, -1);
    consider(Side::CBelowD, below, sum_a, a_ok);
    if (r.contains(1) && a_ok && b_ok) {
        long drop = std::min(sum_a, sum_b);
        if (!(positive_genus && drop < 2) && (!best || Rational(drop) < best->drop))
            best = SideChoice{Side::Equal, Rational(1), Rational(drop)};
    }
    RatioInterval above = r;
    above.require_positive(-1, 1);
    consider(Side::CAboveD, above, sum_b, b_ok);
    if (!best)
        ++tally["sign"];
    return best;
}

struct WallEntry {
    EnumeratedWall wall;
    long sum_b = 0;
    int positive = 0;
    bool base_genus = true;
};

std::vector<WallEntry> build_walls(const RuledSurface& s, const std::vector<Candidate>& cands,
                                   int max_per_wall, Tally& tally)
{
    std::vector<WallEntry> out;
    std::vector<const Candidate*> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (!chosen.empty()) {
            if (auto side = witness(s, chosen, tally)) {
                WallEntry e;
                e.wall.witness_ratio = side->ratio;
                if (s.is_s2_x_s2()) {
                    e.wall.side = side->side;
                    e.wall.min_drop = side->drop;
                }
                const H2Class w(side->ratio, Rational(1));
                bool ok = true;
                for (const auto* c : chosen) {
                    // Every rule must hold against the witness class.
                    if (!classify_component(SurfaceComponent{c->comp.genus, c->comp.dual}, s, w,
                                            Position::Interior)
                             .pass)
                        ok = false;
                    e.wall.components.push_back(c->comp);
                    e.sum_b += c->b;
                    if (c->comp.genus >= 1) {
                        ++e.positive;
                        e.base_genus = e.base_genus && c->comp.genus == s.genus();
                    }
                }
                if (ok) {
                    std::sort(e.wall.components.begin(), e.wall.components.end());
                    out.push_back(std::move(e));
                } else {
                    ++tally["classify"];
                }
            }
        }
        if (static_cast<int>(chosen.size()) == max_per_wall)
            return;
        for (std::size_t i = start; i < cands.size(); ++i) {
            chosen.push_back(&cands[i]);
            rec(i);
            chosen.pop_back();
        }
    };
    rec(0);
    return out;
}

struct Search {
    const RuledSurface& s;
    const std::vector<WallEntry>& walls;
    int max_walls;
    bool budget; ///< min-slope drop budget of 2, S^2 x S^2 only
    bool b_nonnegative;
    long min_b;
    long max_b;

    std::vector<Configuration> found;
    Tally tally;
    std::vector<std::size_t> stack;

    void record()
    {
        Configuration c;
        for (auto i : stack) {
            c.walls.push_back(walls[i].wall);
            c.interior_positive += walls[i].positive;
            c.all_base_genus = c.all_base_genus && walls[i].base_genus;
        }
        std::sort(c.walls.begin(), c.walls.end());
        c.total_positive = c.interior_positive + (s.genus() >= 1 ? 2 : 0);
        found.push_back(std::move(c));
    }

    void descend(std::size_t start, long sum_b, const Rational& drop)
    {
        if (!stack.empty() && sum_b == 2)
            record();
        const int room = max_walls - static_cast<int>(stack.size());
        if (room == 0)
            return;
        for (std::size_t i = start; i < walls.size(); ++i) {
            long nb = sum_b + walls[i].sum_b;
            Rational nd = drop + walls[i].wall.min_drop;
            if (budget && nd > 2) {
                ++tally["drop-budget"];
                continue;
            }
            if (b_nonnegative && nb > 2) {
                ++tally["sum-b"];
                continue;
            }
            // The remaining walls must be able to bring the sum back to 2.
            const long left = room - 1;
            if (nb + left * max_b < 2 || nb + left * min_b > 2) {
                if (nb != 2) {
                    ++tally["sum-b"];
                    continue;
                }
            }
            stack.push_back(i);
            descend(i, nb, nd);
            stack.pop_back();
        }
    }
};

} // namespace

EnumerationResult enumerate_configurations(const RuledSurface& s, const EnumerationOptions& opt)
{
    if (opt.bound < 1 || opt.max_walls < 1 || opt.max_per_wall < 1)
        throw std::invalid_argument("bound, max_walls and max_per_wall must be positive");

    EnumerationResult result;
    Tally tally;
    std::vector<Candidate> cands = candidates(s, opt.bound, tally);
    if (opt.shuffle_seed) {
        std::mt19937_64 rng(*opt.shuffle_seed);
        std::shuffle(cands.begin(), cands.end(), rng);
    }
    std::vector<WallEntry> walls = build_walls(s, cands, opt.max_per_wall, tally);
    if (opt.shuffle_seed) {
        std::mt19937_64 rng(*opt.shuffle_seed + 1);
        std::shuffle(walls.begin(), walls.end(), rng);
    }
    result.candidate_count = cands.size();
    result.wall_count = walls.size();

    long min_b = 0, max_b = 0;
    for (const auto& w : walls) {
        min_b = std::min(min_b, w.sum_b);
        max_b = std::max(max_b, w.sum_b);
    }
    const bool b_nonnegative = s.genus() >= 1 || !s.trivial();

    const unsigned threads = std::max(1u, opt.threads);
    std::vector<Search> searches;
    for (unsigned t = 0; t < threads; ++t)
        searches.push_back(Search{s, walls, opt.max_walls, s.is_s2_x_s2(), b_nonnegative, min_b,
                                  max_b, {}, {}, {}});

    auto run = [&](unsigned tid) {
        Search& sr = searches[tid];
        // Partition on the first wall; each branch is explored by exactly one worker.
        for (std::size_t i = tid; i < walls.size(); i += threads) {
            Search sub{s, walls, opt.max_walls, sr.budget, b_nonnegative, min_b, max_b, {}, {}, {}};
            long nb = walls[i].sum_b;
            Rational nd = walls[i].wall.min_drop;
            if (sr.budget && nd > 2) {
                ++sr.tally["drop-budget"];
                continue;
            }
            if (b_nonnegative && nb > 2) {
                ++sr.tally["sum-b"];
                continue;
            }
            sub.stack.push_back(i);
            sub.descend(i, nb, nd);
            for (auto& c : sub.found)
                sr.found.push_back(std::move(c));
            for (const auto& [k, v] : sub.tally)
                sr.tally[k] += v;
        }
    };
    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(run, t);
        for (auto& th : pool)
            th.join();
    }

    for (auto& sr : searches) {
        for (auto& c : sr.found)
            result.configurations.push_back(std::move(c));
        for (const auto& [k, v] : sr.tally)
            tally[k] += v;
    }
    std::sort(result.configurations.begin(), result.configurations.end());
    result.configurations.erase(
        std::unique(result.configurations.begin(), result.configurations.end()),
        result.configurations.end());
    result.rejections = std::move(tally);

    if (result.configurations.empty())
        throw SearchBoundTooSmall("no configuration fits in bound " + std::to_string(opt.bound) +
                                  " with at most " + std::to_string(opt.max_walls) + " walls");
    for (const auto& c : result.configurations) {
        result.totals.insert(c.total_positive);
        result.max_total = std::max(result.max_total, c.total_positive);
        if (c.total_positive == 4 && !c.all_base_genus)
            result.four_all_base_genus = false;
    }
    return result;
}

} // namespace semifree
