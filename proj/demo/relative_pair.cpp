// Walks through the relative pair at one temperature: equilibrium, the
// canonical-pair scalars, and a few points of the Josephson oscillation.

#include <cstdio>
#include <numbers>

#include "josephson/josephson.hpp"

int main() {
  using namespace josephson;
  const ModelParams params(1.0, 1.0, 0.25, std::numbers::pi / 3, 0.5, 1.0);
  const auto sol = solve_equilibrium(params);
  std::printf("condensed=%d  mu=%.6f  rho0=%.6f  rho_c=%.6f\n", sol.condensed, sol.mu, sol.rho0, sol.rho_c);

  const auto rel = relative_pair_report(params, sol);
  std::printf("c_rel=%.6f  Var(n_rel)=%.6f  Var(j_rel)=%.6f\n", rel.c_rel, rel.var_n_rel, rel.var_j_rel);
  if (rel.phase)
    std::printf("Var(phi_rel)=%.6f  link=%.6f  Var(j0_rel)=%.6f\n", rel.phase->var_phi_rel,
                rel.phase->link_coefficient, rel.phase->j0_variance);

  const double k = 2 * std::numbers::pi / (10 * params.thermal_wavelength());
  const auto tot = total_pair_report(params, sol, Momentum{k, 0, 0});
  std::printf("k=%.4f  Var(n_tot)=%.6f  Var(phi_tot)=%.6f  product=%.6f >= rho0/4=%.6f\n", k,
              tot.var_n_tot, tot.var_phi_tot, tot.uncertainty_product, sol.rho0 / 4);

  const auto grid = uniform_time_grid(std::numbers::pi / params.gamma(), 9);
  const auto nn = autocorrelation_n_trace(params, sol, grid);
  const auto jj = phi_current_trace(params, sol, grid);
  std::printf("%10s %14s %14s\n", "t", "corr_nn", "corr_jj_phi");
  for (std::size_t i = 0; i < grid.size(); ++i)
    std::printf("%10.4f %14.6f %14.6f\n", grid[i], nn.values[i], jj.values[i]);
}
