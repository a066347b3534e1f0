#pragma once

// Two Josephson-coupled condensates: parameters, dispersion, quasiparticle
// branches and their occupations. Units with hbar = k_B = 1, dimension 3.

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "josephson/errors.hpp"

namespace josephson {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Physical parameters. Validated on construction, immutable afterwards.
///
/// beta may be +infinity, which selects the ground state.
class ModelParams {
 public:
  ModelParams(double mass, double lambda, double gamma, double phi, double rho, double beta)
      : mass_(mass), lambda_(lambda), gamma_(gamma), phi_(phi), rho_(rho), beta_(beta) {
    if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("mass must be positive and finite");
    if (!(lambda > 0.0) || !std::isfinite(lambda))
      throw DomainError("lambda must be positive and finite");
    if (gamma == 0.0)
      throw DomainError("gamma must be nonzero: the Josephson gap 2*gamma must be positive");
    if (!(gamma > 0.0) || !std::isfinite(gamma))
      throw DomainError("gamma must be positive and finite (gap 2*gamma > 0)");
    if (!(phi >= 0.0) || !(phi < 2.0 * std::numbers::pi))
      throw DomainError("phi must lie in [0, 2*pi)");
    if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("rho must be positive and finite");
    if (!(beta > 0.0)) throw DomainError("beta must be positive (or +infinity)");
  }

  double mass() const noexcept { return mass_; }
  double lambda() const noexcept { return lambda_; }
  double gamma() const noexcept { return gamma_; }
  double phi() const noexcept { return phi_; }
  double rho() const noexcept { return rho_; }
  double beta() const noexcept { return beta_; }
  bool ground_state() const noexcept { return std::isinf(beta_); }

  /// Thermal wavelength sqrt(2 pi beta / m). Infinite in the ground state.
  double thermal_wavelength() const noexcept {
    return std::sqrt(2.0 * std::numbers::pi * beta_ / mass_);
  }

  ModelParams with_rho(double rho) const { return {mass_, lambda_, gamma_, phi_, rho, beta_}; }
  ModelParams with_beta(double beta) const { return {mass_, lambda_, gamma_, phi_, rho_, beta}; }
  ModelParams with_lambda(double lambda) const {
    return {mass_, lambda, gamma_, phi_, rho_, beta_};
  }
  ModelParams with_gamma(double gamma) const { return {mass_, lambda_, gamma, phi_, rho_, beta_}; }
  ModelParams with_phi(double phi) const { return {mass_, lambda_, gamma_, phi, rho_, beta_}; }

 private:
  double mass_;
  double lambda_;
  double gamma_;
  double phi_;
  double rho_;
  double beta_;
};

struct Momentum {
  std::array<double, 3> components{0.0, 0.0, 0.0};

  constexpr Momentum() = default;
  constexpr Momentum(double kx, double ky, double kz) : components{kx, ky, kz} {}

  constexpr double norm2() const noexcept {
    return components[0] * components[0] + components[1] * components[1] +
           components[2] * components[2];
  }
  double norm() const noexcept { return std::sqrt(norm2()); }
  constexpr bool is_zero() const noexcept { return norm2() == 0.0; }

  friend constexpr Momentum operator+(const Momentum& a, const Momentum& b) {
    return {a.components[0] + b.components[0], a.components[1] + b.components[1],
            a.components[2] + b.components[2]};
  }
  friend constexpr Momentum operator-(const Momentum& a) {
    return {-a.components[0], -a.components[1], -a.components[2]};
  }
  friend constexpr bool operator==(const Momentum&, const Momentum&) = default;
};

/// Free-particle energy |k|^2 / 2m.
inline double dispersion(const ModelParams& params, const Momentum& k) noexcept {
  return k.norm2() / (2.0 * params.mass());
}

struct BranchEnergies {
  double minus;
  double plus;
};

/// Branch energies for a given gap delta = lambda*rho - mu.
///
/// Written as eps + (delta -+ gamma) so that the condensed regime (delta ==
/// gamma) reproduces E_minus = eps_k and E_plus = eps_k + 2 gamma bit for bit.
inline BranchEnergies branch_energies_from_gap(const ModelParams& params, double delta,
                                               double eps) noexcept {
  return {eps + (delta - params.gamma()), eps + (delta + params.gamma())};
}

/// E_{k,-+} = f_k -+ gamma with f_k = eps_k - mu + lambda*rho.
inline BranchEnergies branch_energies(const ModelParams& params, double mu, const Momentum& k) {
  const double delta = params.lambda() * params.rho() - mu;
  return branch_energies_from_gap(params, delta, dispersion(params, k));
}

/// Bose factor 1/(e^x - 1) for x > 0.
inline double bose_factor(double x) noexcept { return 1.0 / std::expm1(x); }

/// Bose-Einstein occupation 1/(e^{beta E} - 1).
///
/// The gapless k = 0 mode belongs to the condensate and has no thermal
/// occupation; asking for it at finite beta is a domain error.
inline double occupation(double energy, double beta) {
  if (std::isinf(beta)) {
    if (energy < 0.0) throw DomainError("occupation: negative energy");
    return 0.0;
  }
  if (!(energy > 0.0))
    throw DomainError("occupation: energy must be positive at finite beta (k = 0 is the condensate)");
  return bose_factor(beta * energy);
}

/// coth(beta*x) with the ground-state limit 1.
inline double coth_beta(double beta, double x) noexcept {
  if (std::isinf(beta)) return 1.0;
  return 1.0 / std::tanh(beta * x);
}

struct BranchPoint {
  Momentum k;
  double f_k;
  double e_minus;
  double e_plus;
  double n_minus;
  double n_plus;
};

inline BranchPoint branch_point(const ModelParams& params, double delta, const Momentum& k) {
  const double eps = dispersion(params, k);
  const auto e = branch_energies_from_gap(params, delta, eps);
  return {k, eps + delta, e.minus, e.plus, occupation(e.minus, params.beta()),
          occupation(e.plus, params.beta())};
}

using Complex = std::complex<double>;
using Matrix2c = std::array<std::array<Complex, 2>, 2>;

/// Coefficients of the quasiparticle creators in terms of the bare ones:
///   b*_{+,k} = rows[0][0] a*_{1,k} + rows[0][1] a*_{2,k}
///   b*_{-,k} = rows[1][0] a*_{1,k} + rows[1][1] a*_{2,k}
struct QuasiparticleMap {
  Matrix2c rows;

  static constexpr int kPlus = 0;
  static constexpr int kMinus = 1;
};

inline QuasiparticleMap quasiparticle_map(const ModelParams& params) {
  const double s = 0.5 * std::numbers::sqrt2;
  const Complex left = std::polar(s, -0.5 * params.phi());
  const Complex right = std::polar(s, 0.5 * params.phi());
  return {{{{left, -right}, {left, right}}}};
}

/// Bare two-point matrix G[i][j] = omega(a*_i a_j) for one momentum mode with
/// quasiparticle occupations n_plus and n_minus.
inline Matrix2c bare_two_point(const QuasiparticleMap& map, double n_plus, double n_minus) {
  const std::array<double, 2> n{n_plus, n_minus};
  Matrix2c g{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int b = 0; b < 2; ++b) g[i][j] += std::conj(map.rows[b][i]) * map.rows[b][j] * n[b];
  return g;
}

}  // namespace josephson
