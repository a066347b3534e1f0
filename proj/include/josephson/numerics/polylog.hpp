#pragma once

// Bose function g_s(z) = sum_{l>=1} z^l / l^s on the real interval z in [0, 1].

#include <cmath>
#include <string>

#include "josephson/errors.hpp"
#include "josephson/numerics/summation.hpp"

namespace josephson::numerics {

namespace detail {

inline constexpr int kSeriesTermCap = 100000;
inline constexpr int kZetaExplicitTerms = 10000;

// Below this value of mu = -ln z the direct series is slow; switch to the
// expansion about z = 1.
inline constexpr double kNearUnitMu = 0.5;

// Within this distance of an integer order, Gamma(1-s) mu^{s-1} and the pole
// term of the expansion nearly cancel; the direct series is used instead as
// long as it converges inside the term cap (mu above kNearIntegerSeriesMu).
inline constexpr double kNearIntegerOrder = 0.05;
inline constexpr double kNearIntegerSeriesMu = 1e-3;

inline bool use_expansion(double s, double mu) {
  if (mu >= kNearUnitMu) return false;
  const double off = std::abs(s - std::round(s));
  return off == 0.0 || off >= kNearIntegerOrder || mu < kNearIntegerSeriesMu;
}

/// zeta(s), s > 1: explicit terms l = 1..10000 plus an Euler-Maclaurin tail.
inline double zeta_explicit(double s) {
  CompensatedSum sum;
  for (int l = kZetaExplicitTerms; l >= 1; --l) sum.add(std::pow(static_cast<double>(l), -s));
  const double n = kZetaExplicitTerms + 1.0;
  const double n_s = std::pow(n, -s);
  // sum_{l>=n} l^{-s} = n^{1-s}/(s-1) + n^{-s}/2 + s n^{-s-1}/12 - s(s+1)(s+2) n^{-s-3}/720 + ...
  const double tail = n * n_s / (s - 1.0) + 0.5 * n_s + s * n_s / (12.0 * n) -
                      s * (s + 1.0) * (s + 2.0) * n_s / (720.0 * n * n * n);
  sum.add(tail);
  return sum.value();
}

/// Direct series with a geometric remainder bound.
inline double bose_series(double s, double z) {
  CompensatedSum sum;
  double zl = 1.0;
  for (int l = 1; l <= kSeriesTermCap; ++l) {
    zl *= z;
    const double term = zl / std::pow(static_cast<double>(l), s);
    sum.add(term);
    // Remaining terms are bounded by z^{l+1}/(l+1)^s * 1/(1-z).
    const double remainder = term * z / (1.0 - z);
    if (remainder < 1e-16 * sum.value()) return sum.value();
  }
  throw ConvergenceError("polylog_bose: series did not converge within the term cap", sum.value(),
                         zl);
}

/// Expansion about z = 1 in mu = -ln z (valid for mu < 2 pi).
inline double bose_near_unity(double s, double mu) {
  CompensatedSum sum;
  const double rounded = std::round(s);
  const bool integer_order = rounded == s;
  const int pole = integer_order ? static_cast<int>(rounded) - 1 : -1;
  if (!integer_order) sum.add(std::tgamma(1.0 - s) * std::pow(mu, s - 1.0));

  double power = 1.0;  // (-mu)^k / k!
  int small_terms = 0;
  for (int k = 0; k < 80; ++k) {
    if (k > 0) power *= -mu / k;
    double term;
    if (k == pole) {
      double harmonic = 0.0;
      for (int j = 1; j <= pole; ++j) harmonic += 1.0 / j;
      term = power * (harmonic - std::log(mu));
    } else {
      term = std::riemann_zeta(s - k) * power;
    }
    sum.add(term);
    if (k > pole && std::abs(term) < 1e-17 * std::abs(sum.value())) {
      if (++small_terms == 2) return sum.value();
    } else {
      small_terms = 0;
    }
  }
  throw ConvergenceError("polylog_bose: expansion about z = 1 did not converge", sum.value(), 0.0);
}

}  // namespace detail

/// Bose function g_s(z) for s >= 1, 0 <= z <= 1.
///
/// z = 1 requires s > 1 (the sum diverges otherwise) and returns zeta(s).
inline double polylog_bose(double s, double z) {
  if (!(z >= 0.0) || !(z <= 1.0)) throw DomainError("polylog_bose: z must lie in [0, 1]");
  if (!(s >= 1.0) || !std::isfinite(s)) throw DomainError("polylog_bose: order s must be >= 1");
  if (z == 0.0) return 0.0;
  if (z == 1.0) {
    if (s <= 1.0) throw DomainError("polylog_bose: divergent at z = 1 for s <= 1");
    return detail::zeta_explicit(s);
  }
  if (s == 1.0) return -std::log1p(-z);
  const double mu = -std::log(z);
  if (detail::use_expansion(s, mu)) return detail::bose_near_unity(s, mu);
  return detail::bose_series(s, z);
}

/// g_s(e^{-mu}) for mu >= 0, avoiding the round trip through z near 1.
inline double polylog_bose_exp(double s, double mu) {
  if (!(mu >= 0.0)) throw DomainError("polylog_bose_exp: mu must be non-negative");
  if (mu == 0.0) return polylog_bose(s, 1.0);
  if (s == 1.0) return -std::log(-std::expm1(-mu));
  if (!(s >= 1.0) || !std::isfinite(s)) throw DomainError("polylog_bose: order s must be >= 1");
  if (detail::use_expansion(s, mu)) return detail::bose_near_unity(s, mu);
  return detail::bose_series(s, std::exp(-mu));
}

}  // namespace josephson::numerics
