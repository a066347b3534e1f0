#pragma once

// Finite-volume oracle: every thermodynamic-limit quantity re-evaluated as a
// sum over the periodic-box momentum lattice (2 pi / L) Z^3. The '-' branch
// zero mode is the condensate and enters as a c-number of size sqrt(rho0 V).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "josephson/equilibrium.hpp"
#include "josephson/errors.hpp"
#include "josephson/fluctuations.hpp"
#include "josephson/model.hpp"
#include "josephson/numerics/summation.hpp"
#include "josephson/parallel.hpp"

namespace josephson::lattice {

struct LatticeSpec {
  double L;
  double cutoff = 40.0;  // keep modes with beta * eps_k <= cutoff
  bool include_condensate = true;

  void validate() const {
    if (!(L > 0.0) || !std::isfinite(L)) throw DomainError("lattice: box length must be positive");
    if (!(cutoff > 0.0) || !std::isfinite(cutoff))
      throw DomainError("lattice: energy cutoff must be positive");
  }

  double volume() const noexcept { return L * L * L; }
  double spacing() const noexcept { return 2.0 * std::numbers::pi / L; }
};

class EmptyLatticeError : public DomainError {
 public:
  using DomainError::DomainError;
};

struct IntegerMode {
  std::int32_t x;
  std::int32_t y;
  std::int32_t z;

  std::int64_t norm2() const noexcept {
    return std::int64_t{x} * x + std::int64_t{y} * y + std::int64_t{z} * z;
  }
};

namespace detail {

/// Largest |n|^2 kept by the cutoff: beta (2 pi/L)^2 n^2 / 2m <= cutoff.
inline std::int64_t max_norm2(const LatticeSpec& spec, const ModelParams& params) {
  const double dk = spec.spacing();
  const double bound = spec.cutoff * 2.0 * params.mass() / (params.beta() * dk * dk);
  if (!(bound < 4.0e12)) throw DomainError("lattice: mode set too large for enumeration");
  return static_cast<std::int64_t>(std::floor(bound));
}

inline Momentum to_momentum(const LatticeSpec& spec, std::int64_t x, std::int64_t y,
                            std::int64_t z) {
  const double dk = spec.spacing();
  return {dk * static_cast<double>(x), dk * static_cast<double>(y), dk * static_cast<double>(z)};
}

/// sum_{n != 0, |n|^2 <= max} term(n) in lexicographic order, one compensated
/// partial per x-slab, partials merged in slab order. The result does not
/// depend on the worker count.
template <class Term>
double mode_sum(const LatticeSpec& spec, const ModelParams& params, int workers, Term&& term) {
  const std::int64_t limit = max_norm2(spec, params);
  if (limit < 1) throw EmptyLatticeError("lattice: energy cutoff excludes every nonzero mode");
  const auto radius = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(limit))));
  const auto slabs = static_cast<std::size_t>(2 * radius + 1);
  auto partials = parallel_map(slabs, workers, [&](std::size_t slab) {
    const std::int64_t x = static_cast<std::int64_t>(slab) - radius;
    numerics::CompensatedSum sum;
    const std::int64_t rest_x = limit - x * x;
    const auto ry = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(rest_x))));
    for (std::int64_t y = -ry; y <= ry; ++y) {
      const std::int64_t rest_y = rest_x - y * y;
      if (rest_y < 0) continue;
      const auto rz = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(rest_y))));
      for (std::int64_t z = -rz; z <= rz; ++z) {
        if (x == 0 && y == 0 && z == 0) continue;
        if (z * z > rest_y) continue;
        sum.add(term(x, y, z));
      }
    }
    return sum;
  });
  numerics::CompensatedSum total;
  for (const auto& p : partials) total.merge(p);
  return total.value();
}

}  // namespace detail

/// Nonzero lattice momenta with beta eps_k <= cutoff, sorted by |n|^2 and
/// then lexicographically on the integer components.
inline std::vector<IntegerMode> lattice_integer_modes(const LatticeSpec& spec,
                                                      const ModelParams& params) {
  spec.validate();
  if (params.ground_state()) throw EmptyLatticeError("lattice: no thermal modes at beta = infinity");
  const std::int64_t limit = detail::max_norm2(spec, params);
  if (limit < 1) throw EmptyLatticeError("lattice: energy cutoff excludes every nonzero mode");
  const auto r = static_cast<std::int32_t>(std::floor(std::sqrt(static_cast<double>(limit))));
  std::vector<IntegerMode> modes;
  for (std::int32_t x = -r; x <= r; ++x)
    for (std::int32_t y = -r; y <= r; ++y)
      for (std::int32_t z = -r; z <= r; ++z) {
        const IntegerMode n{x, y, z};
        const auto n2 = n.norm2();
        if (n2 != 0 && n2 <= limit) modes.push_back(n);
      }
  std::sort(modes.begin(), modes.end(), [](const IntegerMode& a, const IntegerMode& b) {
    const auto a2 = a.norm2();
    const auto b2 = b.norm2();
    if (a2 != b2) return a2 < b2;
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
  });
  return modes;
}

inline std::vector<Momentum> lattice_modes(const LatticeSpec& spec, const ModelParams& params) {
  const auto ints = lattice_integer_modes(spec, params);
  std::vector<Momentum> out;
  out.reserve(ints.size());
  for (const auto& n : ints) out.push_back(detail::to_momentum(spec, n.x, n.y, n.z));
  return out;
}

/// Integer coordinates of k on the lattice; DomainError if k is not a lattice vector.
inline IntegerMode lattice_coordinates(const LatticeSpec& spec, const Momentum& k) {
  IntegerMode n{};
  std::int32_t* slots[3] = {&n.x, &n.y, &n.z};
  for (int i = 0; i < 3; ++i) {
    const double c = k.components[static_cast<std::size_t>(i)] / spec.spacing();
    const double r = std::round(c);
    if (std::abs(c - r) > 1e-9 * std::max(1.0, std::abs(c)))
      throw DomainError("lattice: momentum is not a lattice vector of this box");
    *slots[i] = static_cast<std::int32_t>(r);
  }
  return n;
}

// ---------------------------------------------------------------------------

namespace detail {

struct BranchOccupations {
  double minus;
  double plus;
};

inline BranchOccupations occupations_at(const ModelParams& params, const EquilibriumSolution& sol,
                                        double eps) {
  const auto e = branch_energies_from_gap(params, sol.delta, eps);
  return {bose_factor(params.beta() * e.minus), bose_factor(params.beta() * e.plus)};
}

inline double eps_of(const LatticeSpec& spec, const ModelParams& params, std::int64_t x,
                     std::int64_t y, std::int64_t z) {
  const double dk = spec.spacing();
  const auto n2 = static_cast<double>(x * x + y * y + z * z);
  return dk * dk * n2 / (2.0 * params.mass());
}

inline void require_condensed(const EquilibriumSolution& sol, const char* what) {
  if (!sol.condensed) throw DegenerateStateError(std::string(what) + " requires a condensate");
}

}  // namespace detail

/// rho0 [if included] + (1/V) sum_{k != 0} (n_-(k) + n_+(k)).
inline double lattice_density(const ModelParams& params, const EquilibriumSolution& sol,
                              const LatticeSpec& spec, int workers = 1) {
  spec.validate();
  const double condensate = spec.include_condensate ? sol.rho0 : 0.0;
  if (params.ground_state()) return condensate;
  const double sum = detail::mode_sum(spec, params, workers, [&](auto x, auto y, auto z) {
    const auto n = detail::occupations_at(params, sol, detail::eps_of(spec, params, x, y, z));
    return n.minus + n.plus;
  });
  return condensate + sum / spec.volume();
}

/// (1/gamma) [rho0 + (1/V) sum_{k != 0} (n_-(k) - n_+(k))].
inline double lattice_c_rel(const ModelParams& params, const EquilibriumSolution& sol,
                            const LatticeSpec& spec, int workers = 1) {
  spec.validate();
  detail::require_condensed(sol, "lattice_c_rel");
  if (params.ground_state()) return sol.rho0 / params.gamma();
  const double sum = detail::mode_sum(spec, params, workers, [&](auto x, auto y, auto z) {
    const auto n = detail::occupations_at(params, sol, detail::eps_of(spec, params, x, y, z));
    return n.minus - n.plus;
  });
  return (sol.rho0 + sum / spec.volume()) / params.gamma();
}

inline constexpr double kPerModeIdentityTolerance = 1e-12;

/// Wick evaluation of <F_L(n_rel)^2>:
///   rho0 (2 n_+(0) + 1) + (1/V) sum_{k != 0} [n_+(1 + n_-) + n_-(1 + n_+)].
/// Each summand is checked against (n_- - n_+) coth(beta gamma).
inline double lattice_rel_number_variance(const ModelParams& params, const EquilibriumSolution& sol,
                                          const LatticeSpec& spec, int workers = 1) {
  spec.validate();
  detail::require_condensed(sol, "lattice_rel_number_variance");
  if (params.ground_state()) return sol.rho0;
  const double coth = coth_beta(params.beta(), params.gamma());
  const double n_plus_zero = occupation(2.0 * params.gamma(), params.beta());
  const double sum = detail::mode_sum(spec, params, workers, [&](auto x, auto y, auto z) {
    const auto n = detail::occupations_at(params, sol, detail::eps_of(spec, params, x, y, z));
    const double wick = n.plus * (1.0 + n.minus) + n.minus * (1.0 + n.plus);
    const double virial = (n.minus - n.plus) * coth;
    if (std::abs(wick - virial) > kPerModeIdentityTolerance * std::max(std::abs(wick), std::abs(virial)))
      throw ConsistencyError("lattice_rel_number_variance: per-mode virial identity violated");
    return wick;
  });
  return sol.rho0 * (2.0 * n_plus_zero + 1.0) + sum / spec.volume();
}

/// (1/2)(2 n_-(k) + 1) on a lattice mode k != 0.
inline double lattice_total_phase_variance(const ModelParams& params,
                                           const EquilibriumSolution& sol, const LatticeSpec& spec,
                                           const Momentum& k) {
  spec.validate();
  const auto n = lattice_coordinates(spec, k);
  if (n.norm2() == 0) throw DomainError("lattice_total_phase_variance: k must be nonzero");
  if (params.ground_state()) return 0.5;
  const auto e = branch_energies_from_gap(params, sol.delta, dispersion(params, k));
  return 0.5 * (2.0 * occupation(e.minus, params.beta()) + 1.0);
}

/// Symmetrized Wick summand of the branch pair (p, p + k).
inline double number_pair_summand(double n_p, double n_pk) noexcept {
  return n_p * (1.0 + n_pk) + n_pk * (1.0 + n_p);
}

/// (rho0/2)(2 n_-(k) + 1) + (1/2V) sum_{p != 0, -k} sum over branches of
///   n(E_p)(1 + n(E_{p+k})) + n(E_{p+k})(1 + n(E_p)).
inline double lattice_total_number_variance(const ModelParams& params,
                                            const EquilibriumSolution& sol,
                                            const LatticeSpec& spec, const Momentum& k,
                                            int workers = 1) {
  spec.validate();
  const auto kn = lattice_coordinates(spec, k);
  if (kn.norm2() == 0) throw DomainError("lattice_total_number_variance: k must be nonzero");
  if (params.ground_state()) return 0.5 * sol.rho0;
  const double beta = params.beta();
  const auto ek = branch_energies_from_gap(params, sol.delta, dispersion(params, k));
  const double condensate = 0.5 * sol.rho0 * (2.0 * occupation(ek.minus, beta) + 1.0);
  const double sum = detail::mode_sum(spec, params, workers, [&](auto x, auto y, auto z) {
    const std::int64_t qx = x + kn.x;
    const std::int64_t qy = y + kn.y;
    const std::int64_t qz = z + kn.z;
    if (qx == 0 && qy == 0 && qz == 0) return 0.0;
    const auto np = detail::occupations_at(params, sol, detail::eps_of(spec, params, x, y, z));
    const auto nq = detail::occupations_at(params, sol, detail::eps_of(spec, params, qx, qy, qz));
    return number_pair_summand(np.minus, nq.minus) + number_pair_summand(np.plus, nq.plus);
  });
  return condensate + 0.5 * sum / spec.volume();
}

/// Im <[F_L(n_rel), F_L(j_rel^phi)]> from the bare two-point functions
/// omega(a*_i a_j) of each mode; tends to c_rel sin(phi).
inline double lattice_phi_commutator(const ModelParams& params, const EquilibriumSolution& sol,
                                     const LatticeSpec& spec, int workers = 1) {
  spec.validate();
  detail::require_condensed(sol, "lattice_phi_commutator");
  const auto map = quasiparticle_map(params);
  auto mode_value = [&](double n_plus, double n_minus) {
    const auto g = bare_two_point(map, n_plus, n_minus);
    return (g[0][1] - g[1][0]).imag();
  };
  const double condensate = sol.rho0 * mode_value(0.0, 1.0);
  double thermal = 0.0;
  if (!params.ground_state()) {
    thermal = detail::mode_sum(spec, params, workers, [&](auto x, auto y, auto z) {
      const auto n = detail::occupations_at(params, sol, detail::eps_of(spec, params, x, y, z));
      return mode_value(n.plus, n.minus);
    });
  }
  return (condensate + thermal / spec.volume()) / params.gamma();
}

// ---------------------------------------------------------------------------
// Convergence

enum class Quantity { density, c_rel, rel_number_variance, total_phase_variance, total_number_variance };

inline std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::density: return "density";
    case Quantity::c_rel: return "c_rel";
    case Quantity::rel_number_variance: return "var_n_rel";
    case Quantity::total_phase_variance: return "var_phi_tot";
    case Quantity::total_number_variance: return "var_n_tot";
  }
  return "unknown";
}

struct ConvergenceRow {
  double L;
  double oracle;
  double closed_form;
  double abs_err;
};

struct ConvergenceReport {
  std::string label;
  std::vector<ConvergenceRow> rows;
  double threshold;
  double final_relative_error;
  bool errors_decreasing;
  bool exact;  // every row agrees to 1e-14 relative
  double extrapolated;  // two-point 1/L extrapolation from the last two rows
  bool verdict;
};

inline constexpr double kDefaultConvergenceThreshold = 1e-2;
inline constexpr double kExactnessTolerance = 1e-14;

inline double closed_form(Quantity q, const ModelParams& params, const EquilibriumSolution& sol,
                          const Momentum& k) {
  switch (q) {
    case Quantity::density: return params.rho();
    case Quantity::c_rel: return relative_commutator_scalar(params, sol);
    case Quantity::rel_number_variance: return relative_number_variance(params, sol);
    case Quantity::total_phase_variance: return total_phase_variance(params, k);
    case Quantity::total_number_variance: return total_number_variance(params, sol, k);
  }
  throw DomainError("unknown quantity");
}

inline double lattice_value(Quantity q, const ModelParams& params, const EquilibriumSolution& sol,
                            const LatticeSpec& spec, const Momentum& k, int workers) {
  switch (q) {
    case Quantity::density: return lattice_density(params, sol, spec, workers);
    case Quantity::c_rel: return lattice_c_rel(params, sol, spec, workers);
    case Quantity::rel_number_variance: return lattice_rel_number_variance(params, sol, spec, workers);
    case Quantity::total_phase_variance: return lattice_total_phase_variance(params, sol, spec, k);
    case Quantity::total_number_variance:
      return lattice_total_number_variance(params, sol, spec, k, workers);
  }
  throw DomainError("unknown quantity");
}

/// Box sizes factor * lambda_T.
inline std::vector<double> thermal_box_sequence(const ModelParams& params,
                                                std::span<const double> factors) {
  std::vector<double> out;
  out.reserve(factors.size());
  for (double f : factors) out.push_back(f * params.thermal_wavelength());
  return out;
}

/// Run the lattice evaluation of `q` for each L and compare with the closed
/// form. The verdict requires the final relative error below `threshold` and
/// either strictly decreasing errors or exact agreement at every L.
/// k is used by the momentum-resolved quantities and must lie on every lattice.
inline ConvergenceReport convergence_report(Quantity q, const ModelParams& params,
                                            const EquilibriumSolution& sol,
                                            std::span<const double> box_lengths,
                                            const Momentum& k = {}, int workers = 1,
                                            double threshold = kDefaultConvergenceThreshold,
                                            double cutoff = 40.0) {
  if (box_lengths.size() < 3) throw DomainError("convergence_report: need at least three box sizes");
  for (std::size_t i = 1; i < box_lengths.size(); ++i)
    if (!(box_lengths[i] > box_lengths[i - 1]))
      throw DomainError("convergence_report: box sizes must be strictly increasing");

  const double exact = closed_form(q, params, sol, k);
  ConvergenceReport report{to_string(q), {}, threshold, 0.0, true, true, 0.0, false};
  for (double L : box_lengths) {
    const LatticeSpec spec{L, cutoff, true};
    const double oracle = lattice_value(q, params, sol, spec, k, workers);
    report.rows.push_back({L, oracle, exact, std::abs(oracle - exact)});
  }
  const double scale = std::abs(exact) > 0.0 ? std::abs(exact) : 1.0;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    if (report.rows[i].abs_err > kExactnessTolerance * scale) report.exact = false;
    if (i > 0 && !(report.rows[i].abs_err < report.rows[i - 1].abs_err)) report.errors_decreasing = false;
  }
  const auto& last = report.rows.back();
  const auto& prev = report.rows[report.rows.size() - 2];
  report.final_relative_error = last.abs_err / scale;
  report.extrapolated = (last.L * last.oracle - prev.L * prev.oracle) / (last.L - prev.L);
  report.verdict =
      report.final_relative_error < threshold && (report.errors_decreasing || report.exact);
  return report;
}

}  // namespace josephson::lattice
