#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace semifree {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::invalid_argument on den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "-12", "3/4", "-7/2". Anything else yields nullopt.
std::optional<Rational> parse_rational(std::string_view token);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

bool is_integer(const Rational& q);

/// Largest integer <= q.
Integer floor(const Rational& q);

/// Converts an integral rational that fits in a long. Throws std::domain_error otherwise.
long to_long(const Rational& q);

} // namespace semifree
