#include "semifree/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace semifree {

Rational make_rational(long num, long den)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

std::optional<Integer> parse_integer(std::string_view s)
{
    if (s.empty())
        return std::nullopt;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size())
        return std::nullopt;
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return std::nullopt;
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
}

} // namespace

std::optional<Rational> parse_rational(std::string_view token)
{
    auto slash = token.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_integer(token);
        if (!n)
            return std::nullopt;
        return Rational(*n);
    }
    auto num = parse_integer(token.substr(0, slash));
    auto den_text = token.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        return std::nullopt;
    auto den = parse_integer(den_text);
    if (!num || !den || *den == 0)
        return std::nullopt;
    return make_rational(*num, *den);
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

long to_long(const Rational& q)
{
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw std::domain_error("rational " + to_string(q) + " is not a machine integer");
    return q.get_num().get_si();
}

} // namespace semifree
