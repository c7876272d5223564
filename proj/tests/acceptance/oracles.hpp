#pragma once

// Reference computations written directly from the defining formulas, sharing no
// arithmetic with the library beyond the GMP rational type.

#include "semifree/rational.hpp"

#include <array>
#include <functional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using semifree::Rational;

/// x.y for x = (x0, x1), y = (y0, y1) in the basis {u, v}; vv is 0 or -1.
Rational pair(const Rational& x0, const Rational& x1, const Rational& y0, const Rational& y1,
              long vv);

/// Every integral (a, b) in [-bound, bound]^2 with D.D - c1.D + 2 = 2 g_i and D.w > 0.
std::set<std::pair<long, long>> brute_duals(bool trivial, long g, long g_i, const Rational& wc,
                                            const Rational& wd, long bound);

/// Every (a, b, c, d) in [-3, 3]^4 with psi^*u = a u + b v, psi^*v = c u + d v
/// preserving the form.
std::set<std::array<long, 4>> brute_isometries(bool trivial);

/// Exact one-sided derivative of a polynomial of degree <= 2 from three values:
/// (4 f(s+h) - f(s+2h) - 3 f(s)) / 2h.
Rational right_derivative(const std::function<Rational(const Rational&)>& f, const Rational& s,
                          const Rational& h);
Rational left_derivative(const std::function<Rational(const Rational&)>& f, const Rational& s,
                         const Rational& h);

} // namespace oracle
