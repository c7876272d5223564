#include "semifree/cli.hpp"

#include "semifree/action_file.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace semifree::cli {

namespace {

RuledSurface surface_from(const std::string& kind, int genus)
{
    return RuledSurface(kind == "trivial" ? Bundle::Trivial : Bundle::Nontrivial, genus);
}

std::string number(const Rational& q, bool as_float)
{
    if (!as_float)
        return to_string(q);
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(17) << to_double(q);
    return os.str();
}

int cmd_validate(const std::string& path, std::ostream& out)
{
    ActionData data = load_action_file(path);
    ValidationReport report = validate_action_data(data);
    for (const auto& note : report.notes)
        out << "note: " << note << '\n';
    if (!report.pass()) {
        for (const auto& v : report.violations)
            out << "FAIL " << v.rule << " @ " << v.location << ": " << v.detail << '\n';
        out << "FAIL (" << report.violations.size() << " violations)\n";
        try {
            count_positive_genus(data);
        } catch (const TheoremViolation& e) {
            out << "FAIL theorem: " << e.what() << '\n';
            return TheoremFailure;
        }
        return ValidationFailure;
    }
    PositiveGenusCount count = count_positive_genus(data);
    out << "PASS (" << count.count << " positive-genus surface" << (count.count == 1 ? "" : "s");
    if (count.count > 0 && count.all_base_genus)
        out << ", all genus g=" << data.surface.genus();
    out << ")\n";
    return Ok;
}

int cmd_decide(const std::string& path, std::ostream& out)
{
    ActionData data = load_action_file(path);
    HamiltonianVerdict v = decide_hamiltonian(data);
    out << v.summary() << '\n';
    return v.outcome == HamiltonianVerdict::Outcome::InvalidData ? ValidationFailure : Ok;
}

std::string describe_wall(const EnumeratedWall& w)
{
    std::string s = "[";
    for (std::size_t i = 0; i < w.components.size(); ++i) {
        const auto& c = w.components[i];
        if (i)
            s += " + ";
        s += "g" + std::to_string(c.genus) + ":(" + to_string(c.dual.cu()) + "," +
             to_string(c.dual.cv()) + ")";
    }
    return s + "]";
}

int cmd_enumerate(const std::string& kind, int genus, const EnumerationOptions& opt,
                  std::ostream& out)
{
    RuledSurface S = surface_from(kind, genus);
    EnumerationResult r = enumerate_configurations(S, opt);
    out << "# surface " << describe(S) << " bound " << opt.bound << " max-walls " << opt.max_walls
        << " max-per-wall " << opt.max_per_wall << '\n';
    out << "# candidates " << r.candidate_count << " walls " << r.wall_count << " configurations "
        << r.configurations.size() << '\n';
    out << "# totals";
    for (int t : r.totals)
        out << ' ' << t;
    out << "\n# max-total " << r.max_total << '\n';
    out << "# four-all-base-genus " << (r.four_all_base_genus ? "yes" : "no") << '\n';
    for (const auto& [rule, n] : r.rejections)
        out << "# rejected " << rule << ' ' << n << '\n';
    out << "index,walls,interior_positive,total_positive,configuration\n";
    for (std::size_t i = 0; i < r.configurations.size(); ++i) {
        const auto& c = r.configurations[i];
        out << i << ',' << c.walls.size() << ',' << c.interior_positive << ',' << c.total_positive
            << ',';
        for (std::size_t j = 0; j < c.walls.size(); ++j)
            out << (j ? " " : "") << describe_wall(c.walls[j]);
        out << '\n';
    }
    return Ok;
}

int cmd_dh(const std::string& path, int samples, bool as_float, std::ostream& out)
{
    ActionData data = load_action_file(path);
    PiecewisePoly f = dh_volume(data.pieces, data.surface);
    std::vector<std::pair<Rational, std::string>> points;
    const Rational lo = f.lower(), hi = f.upper();
    for (int i = 0; i <= samples; ++i) {
        Rational t = lo + (hi - lo) * make_rational(i, samples);
        points.emplace_back(t, "sample");
    }
    for (const auto& b : f.breaks())
        points.emplace_back(b, "break");
    std::sort(points.begin(), points.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first)
            return x.first < y.first;
        return x.second < y.second;
    });
    // A breakpoint that is also a sample is reported once, as a break.
    points.erase(std::unique(points.begin(), points.end(),
                             [](const auto& x, const auto& y) { return x.first == y.first; }),
                 points.end());

    auto opt = [&](const std::optional<Rational>& q) { return q ? number(*q, as_float) : ""; };
    out << "t,f,df_left,df_right,kind\n";
    for (const auto& [t, kind] : points)
        out << number(t, as_float) << ',' << number(f(t), as_float) << ','
            << opt(f.derivative_left(t)) << ',' << opt(f.derivative_right(t)) << ',' << kind
            << '\n';
    return Ok;
}

int cmd_actions(const std::string& kind, int genus, std::ostream& out)
{
    RuledSurface S = surface_from(kind, genus);
    H2ActionSets sets = h2_symplectomorphism_actions(S);
    auto dump = [&](const char* name, const std::vector<IsometryMatrix>& ms) {
        out << name << " (" << ms.size() << "):";
        for (const auto& m : ms)
            out << ' ' << to_string(m);
        out << '\n';
    };
    out << describe(S) << '\n';
    dump("stage1", sets.stage1);
    dump("final", sets.final_set);
    return Ok;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fixed point data of semifree circle actions with ruled reduced spaces",
                 "semifree"};
    app.require_subcommand(1);

    std::string file;
    auto* validate = app.add_subcommand("validate", "Validate an action file");
    validate->add_option("file", file)->required();

    auto* decide = app.add_subcommand("decide", "Hamiltonicity verdict for circle-domain data");
    decide->add_option("file", file)->required();

    std::string kind = "trivial";
    int genus = 0;
    EnumerationOptions opt;
    std::uint64_t seed = 0;
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate interior configurations");
    enumerate->add_option("--surface", kind)->check(CLI::IsMember({"trivial", "nontrivial"}))->required();
    enumerate->add_option("--genus", genus)->check(CLI::NonNegativeNumber)->required();
    enumerate->add_option("--bound", opt.bound)->check(CLI::PositiveNumber)->required();
    enumerate->add_option("--max-walls", opt.max_walls)->check(CLI::PositiveNumber)->required();
    enumerate->add_option("--max-per-wall", opt.max_per_wall)->check(CLI::PositiveNumber);
    enumerate->add_option("--threads", opt.threads)->check(CLI::PositiveNumber);
    auto* seed_opt = enumerate->add_option("--shuffle-seed", seed);

    int samples = 8;
    bool as_float = false;
    auto* dh = app.add_subcommand("dh", "DH function samples as CSV");
    dh->add_option("file", file)->required();
    dh->add_option("--samples", samples)->check(CLI::PositiveNumber);
    dh->add_flag("--float", as_float, "print decimals instead of p/q");

    auto* actions = app.add_subcommand("actions", "H^2 isometry sets of a ruled surface");
    actions->add_option("--surface", kind)->check(CLI::IsMember({"trivial", "nontrivial"}))->required();
    actions->add_option("--genus", genus)->check(CLI::NonNegativeNumber)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? Ok : ParseFailure;
    }

    try {
        if (*validate)
            return cmd_validate(file, out);
        if (*decide)
            return cmd_decide(file, out);
        if (*enumerate) {
            if (*seed_opt)
                opt.shuffle_seed = seed;
            return cmd_enumerate(kind, genus, opt, out);
        }
        if (*dh)
            return cmd_dh(file, samples, as_float, out);
        if (*actions)
            return cmd_actions(kind, genus, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return ParseFailure;
    } catch (const MalformedDocument& e) {
        err << "malformed document: " << e.what() << '\n';
        return ValidationFailure;
    } catch (const TheoremViolation& e) {
        err << "theorem violation: " << e.what() << '\n';
        return TheoremFailure;
    } catch (const SearchBoundTooSmall& e) {
        err << "search bound too small: " << e.what() << '\n';
        return ValidationFailure;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << '\n';
        return ValidationFailure;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return Internal;
    }
    return Internal;
}

} // namespace semifree::cli
