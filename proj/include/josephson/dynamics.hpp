#pragma once

// Macroscopic dynamics of the relative pair (F(n_rel), F(j_rel)). The
// generator acts as
//   d/dt F(n_rel) = (2 gamma)^2 F(j_rel),   d/dt F(j_rel) = -F(n_rel),
// a harmonic oscillator at frequency 2 gamma.

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "josephson/equilibrium.hpp"
#include "josephson/errors.hpp"
#include "josephson/fluctuations.hpp"
#include "josephson/model.hpp"
#include "josephson/numerics/summation.hpp"

namespace josephson {

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// Row i holds the coefficients of the evolved basis operator i in the basis
/// (F(n_rel), F(j_rel)).
struct EvolutionMatrix {
  double t;
  Matrix2 entries;

  double determinant() const noexcept {
    return entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0];
  }
};

inline Matrix2 multiply(const Matrix2& a, const Matrix2& b) noexcept {
  Matrix2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

/// Phase 2 gamma t with t first reduced modulo the period pi/gamma.
inline double oscillation_phase(const ModelParams& params, double t) {
  const double period = std::numbers::pi / params.gamma();
  const double reduced = std::fmod(t, period);
  return 2.0 * params.gamma() * reduced;
}

/// M(t) = [[cos 2gt, 2g sin 2gt], [-sin 2gt / 2g, cos 2gt]], det M = 1.
inline EvolutionMatrix evolution_matrix(const ModelParams& params, double t) {
  const double theta = oscillation_phase(params, t);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double two_gamma = 2.0 * params.gamma();
  return {t, {{{c, two_gamma * s}, {-s / two_gamma, c}}}};
}

/// Symmetrized covariance of (F(n_rel), F(j_rel)); off-diagonal vanishes
/// because <F(n)F(j)> = i c_rel / 2 is purely imaginary.
inline Matrix2 relative_covariance(const ModelParams& params, const EquilibriumSolution& sol) {
  return {{{relative_number_variance(params, sol), 0.0},
           {0.0, relative_current_variance(params, sol)}}};
}

namespace detail {

inline void require_condensed(const EquilibriumSolution& sol, const char* what) {
  if (!sol.condensed) throw DegenerateStateError(std::string(what) + " requires a condensate");
}

}  // namespace detail

/// (1/2)<alpha_t(F(n)) F(n) + F(n) alpha_t(F(n))> = Var(n_rel) cos(2 gamma t).
inline double autocorrelation_n(const ModelParams& params, const EquilibriumSolution& sol,
                                double t) {
  detail::require_condensed(sol, "autocorrelation_n");
  const auto m = evolution_matrix(params, t).entries;
  const auto cov = relative_covariance(params, sol);
  return m[0][0] * cov[0][0] + m[0][1] * cov[1][0];
}

/// Symmetrized autocorrelation of F(j_rel).
inline double autocorrelation_j(const ModelParams& params, const EquilibriumSolution& sol,
                                double t) {
  detail::require_condensed(sol, "autocorrelation_j");
  const auto m = evolution_matrix(params, t).entries;
  const auto cov = relative_covariance(params, sol);
  return m[1][0] * cov[0][1] + m[1][1] * cov[1][1];
}

/// Variance of the evolved F(n_rel): M00^2 Var(n) + M01^2 Var(j). Equal to
/// Var(n) at all t by the virial relation.
inline double evolved_number_variance(const ModelParams& params, const EquilibriumSolution& sol,
                                      double t) {
  const auto m = evolution_matrix(params, t).entries;
  const auto cov = relative_covariance(params, sol);
  return m[0][0] * m[0][0] * cov[0][0] + m[0][1] * m[0][1] * cov[1][1];
}

/// Commutator scalar of (alpha_t F(n), alpha_t F(j)) = c_rel det M(t).
inline double commutator_conservation(const ModelParams& params, const EquilibriumSolution& sol,
                                      double t) {
  return relative_commutator_scalar(params, sol) * evolution_matrix(params, t).determinant();
}

struct SignalTrace {
  std::vector<double> times;
  std::vector<double> values;
  std::string label;
};

namespace detail {

inline void require_increasing(std::span<const double> times) {
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1])) throw DomainError("time grid must be strictly increasing");
  for (double t : times)
    if (!std::isfinite(t)) throw DomainError("time grid must be finite");
}

}  // namespace detail

/// Uniform grid of `steps` points on [0, t_max], endpoints included.
inline std::vector<double> uniform_time_grid(double t_max, int steps) {
  if (steps < 2 || !(t_max > 0.0) || !std::isfinite(t_max))
    throw DomainError("time grid needs t_max > 0 and at least two points");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) grid[static_cast<std::size_t>(i)] = t_max * i / (steps - 1);
  return grid;
}

/// Symmetrized autocorrelation of F(j_rel^phi) = sin(phi) F(j_rel):
/// sin^2(phi) Var(j_rel) cos(2 gamma t).
inline SignalTrace phi_current_trace(const ModelParams& params, const EquilibriumSolution& sol,
                                     std::span<const double> times) {
  detail::require_condensed(sol, "phi_current_trace");
  detail::require_increasing(times);
  const double s = std::sin(params.phi());
  SignalTrace trace{{times.begin(), times.end()}, {}, "corr_jj_phi"};
  trace.values.reserve(times.size());
  for (double t : times) trace.values.push_back(s * s * autocorrelation_j(params, sol, t));
  return trace;
}

inline SignalTrace autocorrelation_n_trace(const ModelParams& params,
                                           const EquilibriumSolution& sol,
                                           std::span<const double> times) {
  detail::require_increasing(times);
  SignalTrace trace{{times.begin(), times.end()}, {}, "corr_nn"};
  trace.values.reserve(times.size());
  for (double t : times) trace.values.push_back(autocorrelation_n(params, sol, t));
  return trace;
}

/// sum_g w_g cos(g t) for a map gap -> weight. The model itself has the single
/// gap 2 gamma; other distributions dephase and, if commensurate, revive.
inline SignalTrace superposition_signal(const std::map<double, double>& weights,
                                        std::span<const double> times) {
  if (weights.empty()) throw DomainError("superposition_signal: no gaps given");
  for (const auto& [gap, w] : weights)
    if (!std::isfinite(gap) || !std::isfinite(w) || w < 0.0)
      throw DomainError("superposition_signal: gaps must be finite, weights finite and >= 0");
  detail::require_increasing(times);
  SignalTrace trace{{times.begin(), times.end()}, {}, "superposition"};
  trace.values.reserve(times.size());
  for (double t : times) {
    numerics::CompensatedSum sum;
    for (const auto& [gap, w] : weights) sum.add(w * std::cos(gap * t));
    trace.values.push_back(sum.value());
  }
  return trace;
}

}  // namespace josephson
