#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "josephson/errors.hpp"

namespace josephson::numerics {

struct Bracket {
  double lo;
  double hi;
};

/// Brent's method: inverse quadratic / secant steps inside the bracket,
/// bisection whenever they fail to shrink it fast enough.
///
/// Terminates when the bracket is narrower than tol + 4 eps |x| or f(x) == 0.
/// Deterministic for a given (f, bracket, tol).
template <class F>
double find_root(F&& f, Bracket bracket, double tol, int max_iterations = 500) {
  if (!(tol >= 0.0)) throw DomainError("find_root: tolerance must be non-negative");
  double a = bracket.lo;
  double b = bracket.hi;
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("find_root: bracket must be finite");
  double fa = f(a);
  double fb = f(b);
  if (std::isnan(fa) || std::isnan(fb) || fa * fb > 0.0)
    throw DomainError("find_root: f(lo) and f(hi) must not have the same sign");
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;

  constexpr double eps = std::numeric_limits<double>::epsilon();
  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  for (int iter = 0; iter < max_iterations; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * eps * std::abs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0.0) return b;

    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p;
      double q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol1 ? d : std::copysign(tol1, xm);
    fb = f(b);
  }
  throw ConvergenceError("find_root: iteration limit reached", b, std::abs(c - b));
}

}  // namespace josephson::numerics
