#include "semifree/action_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

namespace semifree {

ParseError::ParseError(std::size_t line_, const std::string& message)
    : std::runtime_error(line_ == 0 ? message : "line " + std::to_string(line_) + ": " + message),
      line(line_)
{
}

namespace {

const char* const kOutsideModel = "action automatically Hamiltonian — outside this data model";

class Line {
public:
    Line(std::size_t number, std::vector<std::string> tokens)
        : number_(number), tokens_(std::move(tokens))
    {
    }

    std::size_t number() const { return number_; }
    bool done() const { return pos_ >= tokens_.size(); }
    const std::string& peek() const { return tokens_[pos_]; }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(number_, message); }

    std::string word(const std::string& what)
    {
        if (done())
            fail("expected " + what);
        return tokens_[pos_++];
    }

    void keyword(const std::string& kw)
    {
        std::string got = word("'" + kw + "'");
        if (got != kw)
            fail("expected '" + kw + "', found '" + got + "'");
    }

    Rational number(const std::string& what)
    {
        std::string tok = word(what);
        auto q = parse_rational(tok);
        if (!q)
            fail("expected " + what + " as an integer or p/q, found '" + tok + "'");
        return *q;
    }

    long integer(const std::string& what)
    {
        Rational q = number(what);
        if (!is_integer(q) || !q.get_num().fits_slong_p())
            fail("expected " + what + " as an integer, found " + to_string(q));
        return q.get_num().get_si();
    }

    void end()
    {
        if (!done())
            fail("unexpected token '" + peek() + "'");
    }

private:
    std::size_t number_;
    std::vector<std::string> tokens_;
    std::size_t pos_ = 0;
};

std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view raw =
            text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        std::istringstream in{std::string(raw)};
        std::vector<std::string> tokens;
        for (std::string tok; in >> tok;)
            tokens.push_back(tok);
        if (!tokens.empty())
            lines.emplace_back(number, std::move(tokens));
        if (nl == std::string_view::npos)
            break;
        start = nl + 1;
    }
    return lines;
}

FixedComponent parse_component(Line& line)
{
    std::string kind = line.word("'surface', 'isolated' or 'fourfold'");
    if (kind == "fourfold")
        line.fail(kOutsideModel);
    if (kind == "isolated") {
        long p = line.integer("weight p");
        long q = line.integer("weight q");
        long r = line.integer("weight r");
        line.end();
        if (p <= 0 || q <= 0 || r <= 0)
            line.fail("isolated point weights (p, q, -r) need p, q, r >= 1");
        return IsolatedPoint{p, q, r};
    }
    if (kind != "surface")
        line.fail("expected 'surface', 'isolated' or 'fourfold', found '" + kind + "'");
    long genus = line.integer("genus");
    if (genus < 0)
        line.fail("genus must be nonnegative");
    line.keyword("dual");
    Rational a = line.number("dual coefficient a");
    Rational b = line.number("dual coefficient b");
    if (!is_integer(a) || !is_integer(b))
        line.fail("Poincare dual must be integral");
    if (!line.done()) {
        line.keyword("index");
        long index = line.integer("Morse index");
        if (index == 0 || index == 4)
            line.fail(kOutsideModel);
        if (index != 2)
            line.fail("a fixed surface has Morse index 0, 2 or 4, found " + std::to_string(index));
    }
    line.end();
    return SurfaceComponent{genus, H2Class(a, b)};
}

} // namespace

ActionData parse_action_file(std::string_view text)
{
    std::vector<Line> lines = tokenize(text);
    ActionData data;
    bool have_surface = false, have_domain = false;

    for (auto& line : lines) {
        const std::string head = line.word("a keyword");
        if (head == "surface") {
            if (have_surface)
                line.fail("duplicate surface line");
            std::string bundle = line.word("'trivial' or 'nontrivial'");
            if (bundle != "trivial" && bundle != "nontrivial")
                line.fail("expected 'trivial' or 'nontrivial', found '" + bundle + "'");
            long genus = line.integer("base genus");
            if (genus < 0)
                line.fail("base genus must be nonnegative");
            if (!line.done()) {
                line.keyword("twisted");
                data.twisted = true;
            }
            line.end();
            data.surface =
                RuledSurface(bundle == "trivial" ? Bundle::Trivial : Bundle::Nontrivial,
                             static_cast<int>(genus));
            have_surface = true;
        } else if (head == "domain") {
            if (have_domain)
                line.fail("duplicate domain line");
            std::string kind = line.word("'interval' or 'circle'");
            if (kind != "interval" && kind != "circle")
                line.fail("expected 'interval' or 'circle', found '" + kind + "'");
            data.domain.kind = kind == "interval" ? DomainKind::Interval : DomainKind::Circle;
            data.domain.t0 = line.number("t0");
            data.domain.t1 = line.number("t1");
            line.end();
            have_domain = true;
        } else if (head == "seam") {
            if (data.seam)
                line.fail("duplicate seam line");
            data.seam = line.number("seam value");
            line.end();
        } else if (head == "piece") {
            Rational t0 = line.number("t_start");
            Rational t1 = line.number("t_end");
            line.keyword("omega");
            Affine c, d;
            c.constant = line.number("c0");
            c.slope = line.number("c1");
            d.constant = line.number("d0");
            d.slope = line.number("d1");
            line.keyword("euler");
            Rational eu = line.number("euler u coefficient");
            Rational ev = line.number("euler v coefficient");
            line.end();
            try {
                data.pieces.emplace_back(t0, t1, c, d, H2Class(eu, ev));
            } catch (const std::invalid_argument& e) {
                line.fail(e.what());
            }
        } else if (head == "wall") {
            Rational s = line.number("critical value");
            FixedComponent comp = parse_component(line);
            auto it = std::find_if(data.walls.begin(), data.walls.end(),
                                   [&](const Wall& w) { return w.s == s; });
            if (it == data.walls.end())
                data.walls.push_back({s, {comp}});
            else
                it->components.push_back(comp);
        } else if (head == "extremum") {
            ExtremalAnnotation ann;
            std::string end = line.word("'min' or 'max'");
            if (end != "min" && end != "max")
                line.fail("expected 'min' or 'max', found '" + end + "'");
            ann.end = end == "min" ? End::Min : End::Max;
            line.keyword("genus");
            ann.genus = line.integer("genus");
            line.keyword("normalchern");
            ann.normal_chern = line.integer("normal Chern number");
            if (!line.done()) {
                line.keyword("twistedbranch");
                ann.twisted_branch = true;
            }
            line.end();
            auto& slot = ann.end == End::Min ? data.min : data.max;
            if (slot)
                line.fail("duplicate " + end + " extremum");
            slot = ann;
        } else {
            line.fail("unknown keyword '" + head + "'");
        }
    }
    if (!have_surface)
        throw ParseError(0, "missing surface line");
    if (!have_domain)
        throw ParseError(0, "missing domain line");
    if (data.pieces.empty())
        throw ParseError(0, "missing piece lines");
    return data;
}

ActionData load_action_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(0, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_action_file(buf.str());
}

std::string serialize_action_data(const ActionData& data)
{
    std::ostringstream os;
    const auto& S = data.surface;
    os << "surface " << to_string(S.bundle()) << ' ' << S.genus() << (data.twisted ? " twisted" : "")
       << '\n';
    os << "domain " << (data.domain.kind == DomainKind::Interval ? "interval" : "circle") << ' '
       << to_string(data.domain.t0) << ' ' << to_string(data.domain.t1) << '\n';
    if (data.seam)
        os << "seam " << to_string(*data.seam) << '\n';
    for (const auto& p : data.pieces)
        os << "piece " << to_string(p.t_start) << ' ' << to_string(p.t_end) << " omega "
           << to_string(p.c.constant) << ' ' << to_string(p.c.slope) << ' '
           << to_string(p.d.constant) << ' ' << to_string(p.d.slope) << " euler "
           << to_string(p.euler.cu()) << ' ' << to_string(p.euler.cv()) << '\n';
    for (const auto& w : data.walls) {
        for (const auto& c : w.components) {
            os << "wall " << to_string(w.s) << ' ';
            if (const auto* s = std::get_if<SurfaceComponent>(&c))
                os << "surface " << s->genus << " dual " << to_string(s->dual.cu()) << ' '
                   << to_string(s->dual.cv());
            else {
                const auto& p = std::get<IsolatedPoint>(c);
                os << "isolated " << p.p << ' ' << p.q << ' ' << p.r;
            }
            os << '\n';
        }
    }
    for (const auto* ann : {&data.min, &data.max}) {
        if (!*ann)
            continue;
        const auto& a = **ann;
        os << "extremum " << (a.end == End::Min ? "min" : "max") << " genus " << a.genus
           << " normalchern " << a.normal_chern << (a.twisted_branch ? " twistedbranch" : "")
           << '\n';
    }
    return os.str();
}

} // namespace semifree
