#pragma once

// Thermal density of an ideal Bose branch with energy offset alpha:
//   rho(alpha) = \int d^3k/(2 pi)^3  1/(e^{beta (k^2/2m + alpha)} - 1).

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "josephson/errors.hpp"
#include "josephson/model.hpp"
#include "josephson/numerics/polylog.hpp"
#include "josephson/numerics/quadrature.hpp"

namespace josephson::numerics {

enum class DensityMethod { series, quadrature };

struct DensityValue {
  double alpha;
  double value;
  DensityMethod method;
  double cross_check;  // value from the other method; equal to value when beta is infinite
};

inline constexpr double kDensityAgreement = 1e-8;

// e^{-x} underflows past this point.
inline constexpr double kUnderflowExponent = 745.0;

/// Closed form g_{3/2}(e^{-beta alpha}) / lambda_T^3.
inline double rho_alpha_series(const ModelParams& params, double alpha) {
  if (!(alpha >= 0.0)) throw DomainError("rho_alpha: alpha must be non-negative");
  if (params.ground_state()) return 0.0;
  const double lt = params.thermal_wavelength();
  return polylog_bose_exp(1.5, params.beta() * alpha) / (lt * lt * lt);
}

/// Radial quadrature in u = p sqrt(beta/2m):
///   rho = (2m/beta)^{3/2} / (2 pi^2) e^{-beta alpha} \int_0^{sqrt(745)} u^2 e^{-u^2} / (1 - e^{-u^2 - beta alpha}) du.
/// The e^{-beta alpha} factor is pulled out so relative accuracy does not
/// degrade at large alpha.
inline double rho_alpha_quadrature(const ModelParams& params, double alpha,
                                   const QuadratureSpec& spec = {}) {
  if (!(alpha >= 0.0)) throw DomainError("rho_alpha: alpha must be non-negative");
  if (params.ground_state()) return 0.0;
  const double shift = params.beta() * alpha;
  auto integrand = [shift](double u) {
    const double u2 = u * u;
    return u2 * std::exp(-u2) / -std::expm1(-(u2 + shift));
  };
  // For small shifts the integrand has a knee of width sqrt(shift) at u = 0;
  // geometric breakpoints keep it visible to the quadrature.
  std::vector<double> breaks{0.0};
  for (double u = std::sqrt(shift); u < 1.0 && u > 0.0; u *= 8.0) breaks.push_back(u);
  breaks.push_back(1.0);
  breaks.push_back(std::sqrt(kUnderflowExponent));
  CompensatedSum total;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    total.add(adaptive_quad(integrand, breaks[i], breaks[i + 1], spec).value);
  const double scale = std::pow(2.0 * params.mass() / params.beta(), 1.5) /
                       (2.0 * std::numbers::pi * std::numbers::pi);
  return scale * std::exp(-shift) * total.value();
}

/// rho(alpha) by the closed form, cross-checked against quadrature.
///
/// Throws ConsistencyError if the two disagree by more than 1e-8 relative.
inline DensityValue rho_alpha(const ModelParams& params, double alpha) {
  if (!(alpha >= 0.0)) throw DomainError("rho_alpha: alpha must be non-negative");
  if (params.ground_state()) return {alpha, 0.0, DensityMethod::series, 0.0};
  const double series = rho_alpha_series(params, alpha);
  const double quad = rho_alpha_quadrature(params, alpha);
  if (std::abs(series - quad) > kDensityAgreement * std::abs(series)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "rho_alpha: series " << series << " and quadrature " << quad
        << " disagree at alpha = " << alpha;
    throw ConsistencyError(msg.str());
  }
  return {alpha, series, DensityMethod::series, quad};
}

}  // namespace josephson::numerics
