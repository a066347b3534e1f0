#pragma once

// Static fluctuation theory of the two canonical pairs:
//   total:    (F_k(n_tot), F_k(phi_tot)),  [F, F] = i sqrt(rho0)
//   relative: (F(n_rel),   F(j_rel)),      [F, F] = i c_rel
// plus the relative phase F(phi_rel) and the coarse-graining test.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "josephson/equilibrium.hpp"
#include "josephson/errors.hpp"
#include "josephson/model.hpp"
#include "josephson/numerics/density.hpp"
#include "josephson/numerics/quadrature.hpp"
#include "josephson/numerics/summation.hpp"

namespace josephson {

// ---------------------------------------------------------------------------
// Total pair

/// (1/2) coth(beta eps_k / 2); 1/2 in the ground state, where k = 0 is allowed.
inline double total_phase_variance(const ModelParams& params, const Momentum& k) {
  if (params.ground_state()) return 0.5;
  if (k.is_zero())
    throw DomainError("total_phase_variance: k = 0 diverges at finite temperature");
  return 0.5 * coth_beta(params.beta(), 0.5 * dispersion(params, k));
}

namespace detail {

/// \int_{p.k >= -k^2/2} d^3p/(2pi)^3 n(beta E_p) n(beta E_{p+k}) for E_p = eps_p + offset.
///
/// The half space keeps the singular point p = -k of n(E_{p+k}) outside the
/// domain; the mirror half is identical under p -> -p-k.
inline double half_space_pair_integral(const ModelParams& params, double offset, double k,
                                       const numerics::QuadratureSpec& outer_spec) {
  const double beta = params.beta();
  const double two_m = 2.0 * params.mass();
  const double p_max = std::sqrt(two_m * numerics::kUnderflowExponent / beta);
  numerics::QuadratureSpec inner_spec = outer_spec;
  inner_spec.rel_tol = std::min(1e-9, 0.01 * outer_spec.rel_tol);
  inner_spec.abs_tol = 1e-300;

  auto outer = [&](double p) {
    const double c_min = std::max(-1.0, -k / (2.0 * p));
    const double n_p = bose_factor(beta * (p * p / two_m + offset));
    auto inner = [&](double c) {
      const double q2 = p * p + k * k + 2.0 * p * k * c;
      return bose_factor(beta * (q2 / two_m + offset));
    };
    const double angular = numerics::adaptive_quad(inner, c_min, 1.0, inner_spec).value;
    return p * p * n_p * angular;
  };

  numerics::CompensatedSum total;
  total.add(numerics::adaptive_quad(outer, 0.0, 0.5 * k, outer_spec).value);
  if (p_max > 0.5 * k) total.add(numerics::adaptive_quad(outer, 0.5 * k, p_max, outer_spec).value);
  return total.value() / (4.0 * std::numbers::pi * std::numbers::pi);
}

}  // namespace detail

inline numerics::QuadratureSpec default_fluctuation_quadrature() {
  return {1e-7, 1e-300, 2000};
}

/// Variance of F_k(n_tot) for k != 0:
///   (rho0/2) coth(beta eps_k/2) + sum over branches of
///   (1/2) \int d^3p/(2pi)^3 [n(E_p)(1 + n(E_{p+k})) + n(E_{p+k})(1 + n(E_p))].
///
/// Each branch integral equals 2 rho_branch + 4 x (half-space pair integral),
/// which is what is evaluated. Ground state: rho0/2.
inline double total_number_variance(const ModelParams& params, const EquilibriumSolution& sol,
                                    const Momentum& k,
                                    const numerics::QuadratureSpec& spec = default_fluctuation_quadrature()) {
  if (params.ground_state()) return 0.5 * sol.rho0;
  if (k.is_zero())
    throw DomainError("total_number_variance: k = 0 diverges at finite temperature");
  const double kk = k.norm();
  const double condensate = 0.5 * sol.rho0 * coth_beta(params.beta(), 0.5 * dispersion(params, k));
  numerics::CompensatedSum total;
  total.add(condensate);
  const double offsets[2] = {sol.delta - params.gamma(), sol.delta + params.gamma()};
  const double densities[2] = {sol.rho_th_minus, sol.rho_th_plus};
  for (int b = 0; b < 2; ++b) {
    total.add(densities[b]);
    total.add(2.0 * detail::half_space_pair_integral(params, offsets[b], kk, spec));
  }
  return total.value();
}

/// sqrt(rho0); zero without a condensate.
inline double total_commutator_scalar(const EquilibriumSolution& sol) {
  return sol.condensed ? std::sqrt(sol.rho0) : 0.0;
}

/// Ground-state, k -> 0 product Var(n_tot) Var(phi_tot) = rho0/4.
inline double uncertainty_product_ground(const EquilibriumSolution& sol) {
  return (0.5 * sol.rho0) * 0.5;
}

struct TotalPairReport {
  Momentum k;
  double var_n_tot;
  double var_phi_tot;
  double commutator_scalar;
  double uncertainty_product;
};

inline TotalPairReport total_pair_report(const ModelParams& params, const EquilibriumSolution& sol,
                                         const Momentum& k) {
  const double var_n = total_number_variance(params, sol, k);
  const double var_phi = total_phase_variance(params, k);
  return {k, var_n, var_phi, total_commutator_scalar(sol), var_n * var_phi};
}

// ---------------------------------------------------------------------------
// Relative pair

/// c_rel = (rho0 + rho_- - rho_+)/gamma. In the condensed phase rho_-,+ are
/// rho(0), rho(2 gamma); in the normal phase they are the thermal densities at
/// the solved gap (outside the regime where the canonical-pair result holds).
inline double relative_commutator_scalar(const ModelParams& params, const EquilibriumSolution& sol) {
  return (sol.rho0 + sol.rho_th_minus - sol.rho_th_plus) / params.gamma();
}

/// Duhamel two-point function (F(n_rel), F(n_rel))~ = c_rel / beta.
inline std::optional<double> duhamel_number_two_point(const ModelParams& params,
                                                      const EquilibriumSolution& sol) {
  if (params.ground_state()) return std::nullopt;
  return relative_commutator_scalar(params, sol) / params.beta();
}

/// c_rel gamma coth(beta gamma).
inline double relative_number_variance(const ModelParams& params, const EquilibriumSolution& sol) {
  const double gamma = params.gamma();
  return relative_commutator_scalar(params, sol) * gamma * coth_beta(params.beta(), gamma);
}

/// Virial relation: Var(n_rel) / (2 gamma)^2.
inline double relative_current_variance(const ModelParams& params, const EquilibriumSolution& sol) {
  const double two_gamma = 2.0 * params.gamma();
  return relative_number_variance(params, sol) / (two_gamma * two_gamma);
}

struct RelativePhaseReport {
  double var_phi_rel;       // (1/4) coth(beta gamma)
  double link_coefficient;  // sqrt(rho0)/gamma, F(j0_rel) = link F(phi_rel)
  double j0_variance;       // link^2 var_phi_rel = (rho0/4 gamma^2) coth(beta gamma)
};

inline RelativePhaseReport relative_phase_report(const ModelParams& params,
                                                 const EquilibriumSolution& sol) {
  if (!sol.condensed)
    throw DegenerateStateError("relative phase link is undefined without a condensate");
  const double var_phi = 0.25 * coth_beta(params.beta(), params.gamma());
  const double link = std::sqrt(sol.rho0) / params.gamma();
  return {var_phi, link, link * link * var_phi};
}

struct RelativePairReport {
  double c_rel;
  std::optional<double> duhamel_nn;
  double var_n_rel;
  double var_j_rel;
  std::optional<RelativePhaseReport> phase;  // absent outside the condensed phase
  bool condensed;
};

inline RelativePairReport relative_pair_report(const ModelParams& params,
                                               const EquilibriumSolution& sol) {
  RelativePairReport r{relative_commutator_scalar(params, sol),
                       duhamel_number_two_point(params, sol),
                       relative_number_variance(params, sol),
                       relative_current_variance(params, sol),
                       std::nullopt,
                       sol.condensed};
  if (sol.condensed) r.phase = relative_phase_report(params, sol);
  return r;
}

// ---------------------------------------------------------------------------
// Coarse graining

inline constexpr double kCoarseGrainEquality = 1e-10;
inline constexpr double kCoarseGrainNegativeSlack = 1e-12;

/// Second moments of two fluctuation observables A, B in one state; the
/// cross moment is symmetrized, (1/2) <AB + BA>.
struct SecondMoments {
  double var_a;
  double var_b;
  double cross_symmetrized;
};

/// <(A - B)^2> = var_a + var_b - 2 cross. Slightly negative values from
/// rounding are clamped to zero; anything beyond the slack is an error.
inline double coarse_grain_distance(const SecondMoments& m) {
  const double d = m.var_a + m.var_b - 2.0 * m.cross_symmetrized;
  const double scale = std::max({std::abs(m.var_a), std::abs(m.var_b), 1.0});
  if (d < -kCoarseGrainNegativeSlack * scale)
    throw ConsistencyError("coarse_grain_distance: moments imply a negative variance");
  return std::max(d, 0.0);
}

inline double coarse_grain_distance(double var_a, double var_b, double cross_symmetrized) {
  return coarse_grain_distance(SecondMoments{var_a, var_b, cross_symmetrized});
}

/// Two fluctuation operators coincide when <(A - B)^2> < 1e-10 max(var_a, var_b).
inline bool fluctuations_coincide(const SecondMoments& m) {
  return coarse_grain_distance(m) < kCoarseGrainEquality * std::max(m.var_a, m.var_b);
}

namespace detail {

/// For X = i x (b* - b), Y = i y (b* - b) on one mode with occupation n:
/// <XY> = x y (2n + 1), already symmetric.
inline double quadrature_moment(double x, double y, double occupation) {
  return x * y * (2.0 * occupation + 1.0);
}

}  // namespace detail

/// Moments of F(j0_rel) and (sqrt(rho0)/gamma) F(phi_rel), computed mode by
/// mode on the k = 0 '+' quasiparticle with the '-' condensate as a c-number:
///   F(j0_rel) = i sqrt(rho0)/(2 gamma) (b*_+ - b_+),  F(phi_rel) = (i/2)(b*_+ - b_+).
inline SecondMoments condensate_current_vs_phase(const ModelParams& params,
                                                 const EquilibriumSolution& sol) {
  const auto phase = relative_phase_report(params, sol);
  const double n_plus = occupation(2.0 * params.gamma(), params.beta());
  const double j0 = std::sqrt(sol.rho0) / (2.0 * params.gamma());
  const double scaled_phi = phase.link_coefficient * 0.5;
  return {detail::quadrature_moment(j0, j0, n_plus),
          detail::quadrature_moment(scaled_phi, scaled_phi, n_plus),
          detail::quadrature_moment(j0, scaled_phi, n_plus)};
}

/// Moments of F(j_rel) and F(j0_rel). The k != 0 remainder of j_rel is
/// independent of the zero mode and centred, so the cross moment is Var(j0).
inline SecondMoments current_vs_condensate_current(const ModelParams& params,
                                                   const EquilibriumSolution& sol) {
  if (!sol.condensed)
    throw DegenerateStateError("condensate current is undefined without a condensate");
  const double n_plus = occupation(2.0 * params.gamma(), params.beta());
  const double j0 = std::sqrt(sol.rho0) / (2.0 * params.gamma());
  const double var_j0 = detail::quadrature_moment(j0, j0, n_plus);
  return {relative_current_variance(params, sol), var_j0, var_j0};
}

}  // namespace josephson
