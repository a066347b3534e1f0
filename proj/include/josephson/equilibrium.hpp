#pragma once

// Self-consistent chemical potential, condensate density and order
// parameters of the coupled system at total density rho.

#include <cmath>
#include <span>
#include <sstream>
#include <vector>

#include "josephson/errors.hpp"
#include "josephson/model.hpp"
#include "josephson/numerics/density.hpp"
#include "josephson/numerics/roots.hpp"
#include "josephson/parallel.hpp"

namespace josephson {

struct EquilibriumSolution {
  double mu;            // chemical potential
  double delta;         // gap variable lambda*rho - mu, >= gamma
  double rho0;          // condensate density
  double rho_th_minus;  // thermal density of the '-' branch
  double rho_th_plus;   // thermal density of the '+' branch
  double rho_c;         // critical density rho(0) + rho(2 gamma)
  bool condensed;
};

/// rho(0) + rho(2 gamma); zero in the ground state.
inline double critical_density(const ModelParams& params) {
  if (params.ground_state()) return 0.0;
  return numerics::rho_alpha(params, 0.0).value +
         numerics::rho_alpha(params, 2.0 * params.gamma()).value;
}

/// Residual tolerance of the normal-phase density equation, relative to rho.
inline constexpr double kDensityResidualTolerance = 1e-10;

inline EquilibriumSolution solve_equilibrium(const ModelParams& params) {
  const double gamma = params.gamma();
  const double rho = params.rho();
  const double lambda_rho = params.lambda() * rho;

  if (params.ground_state()) return {lambda_rho - gamma, gamma, rho, 0.0, 0.0, 0.0, true};

  const double rho_minus = numerics::rho_alpha(params, 0.0).value;
  const double rho_plus = numerics::rho_alpha(params, 2.0 * gamma).value;
  const double rho_c = rho_minus + rho_plus;
  // rho == rho_c counts as condensed with rho0 = 0.
  if (rho >= rho_c) return {lambda_rho - gamma, gamma, rho - rho_c, rho_minus, rho_plus, rho_c, true};

  // Normal phase: solve rho(a) + rho(a + 2 gamma) = rho for a = delta - gamma > 0.
  auto excess = [&](double a) {
    return numerics::rho_alpha(params, a).value +
           numerics::rho_alpha(params, a + 2.0 * gamma).value - rho;
  };
  double hi = 1.0 / params.beta();
  for (int doublings = 0; excess(hi) >= 0.0; ++doublings) {
    if (doublings > 200) throw ConsistencyError("solve_equilibrium: could not bracket the gap");
    hi *= 2.0;
  }
  const double a = numerics::find_root(excess, {0.0, hi}, 0.0);
  const double th_minus = numerics::rho_alpha(params, a).value;
  const double th_plus = numerics::rho_alpha(params, a + 2.0 * gamma).value;
  const double residual = th_minus + th_plus - rho;
  if (!(std::abs(residual) < kDensityResidualTolerance * rho)) {
    std::ostringstream msg;
    msg << "solve_equilibrium: normal-phase density residual " << residual << " too large";
    throw ConvergenceError(msg.str(), gamma + a, residual);
  }
  const double delta = gamma + a;
  return {lambda_rho - delta, delta, 0.0, th_minus, th_plus, rho_c, false};
}

struct OrderParameters {
  Complex b_minus;  // <b*_-(x)> with the gauge angle fixed to zero
  Complex a1;
  Complex a2;
};

inline OrderParameters order_parameters(const EquilibriumSolution& sol, const ModelParams& params) {
  if (!sol.condensed || sol.rho0 == 0.0) return {};
  const double amplitude = std::sqrt(0.5 * sol.rho0);
  return {Complex{std::sqrt(sol.rho0), 0.0}, std::polar(amplitude, 0.5 * params.phi()),
          std::polar(amplitude, -0.5 * params.phi())};
}

enum class SweepAxis { rho, beta };

struct SweepPoint {
  ModelParams params;
  EquilibriumSolution solution;
};

/// Solve the equilibrium at every grid value of `axis`, other parameters taken
/// from `base`. Output order follows the grid regardless of `workers`.
///
/// Checks that rho0 is non-decreasing along increasing rho (resp. beta).
inline std::vector<SweepPoint> phase_diagram_sweep(const ModelParams& base, SweepAxis axis,
                                                   std::span<const double> grid, int workers = 1) {
  if (grid.empty()) throw DomainError("phase_diagram_sweep: empty grid");
  const bool increasing = grid.size() < 2 || grid[1] > grid[0];
  for (std::size_t i = 1; i < grid.size(); ++i)
    if ((grid[i] > grid[i - 1]) != increasing || grid[i] == grid[i - 1])
      throw DomainError("phase_diagram_sweep: grid must be strictly monotone");

  auto points = parallel_map(grid.size(), workers, [&](std::size_t i) {
    const ModelParams p = axis == SweepAxis::rho ? base.with_rho(grid[i]) : base.with_beta(grid[i]);
    return SweepPoint{p, solve_equilibrium(p)};
  });

  for (std::size_t i = 1; i < points.size(); ++i) {
    const double prev = points[i - 1].solution.rho0;
    const double cur = points[i].solution.rho0;
    const double slack = 1e-14 * std::max(points[i].params.rho(), points[i - 1].params.rho());
    if (increasing ? cur < prev - slack : cur > prev + slack)
      throw ConsistencyError("phase_diagram_sweep: condensate density not monotone along grid");
  }
  return points;
}

}  // namespace josephson
