#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <tuple>
#include <utility>
#include <vector>

#include "josephson/errors.hpp"
#include "josephson/numerics/summation.hpp"

namespace josephson::numerics {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;

  void validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw DomainError("quadrature tolerances must be > 0");
    if (max_subdivisions < 1) throw DomainError("quadrature needs at least one subdivision");
  }
};

struct QuadratureResult {
  double value;
  double error;
  int subdivisions;
};

namespace detail {

// Kronrod abscissae on [0, 1]; odd indices are the embedded Gauss points.
inline constexpr std::array<double, 8> kKronrodNodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gauss_kronrod_15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  double abs_sum = std::abs(kronrod);
  std::array<double, 7> f_left{};
  std::array<double, 7> f_right{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    f_left[j] = f(center - dx);
    f_right[j] = f(center + dx);
    const double pair = f_left[j] + f_right[j];
    kronrod += kKronrodWeights[j] * pair;
    abs_sum += kKronrodWeights[j] * (std::abs(f_left[j]) + std::abs(f_right[j]));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j)
    asc += kKronrodWeights[j] * (std::abs(f_left[j] - mean) + std::abs(f_right[j] - mean));

  const double value = kronrod * half;
  const double resabs = abs_sum * std::abs(half);
  const double resasc = asc * std::abs(half);
  double error = std::abs((kronrod - gauss) * half);
  if (resasc != 0.0 && error != 0.0) error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
    error = std::max(50.0 * eps * resabs, error);
  return {a, b, value, error};
}

template <class F>
QuadratureResult adaptive_quad_finite(F& f, double a, double b, const QuadratureSpec& spec) {
  std::vector<Panel> heap;
  std::vector<Panel> frozen;
  heap.push_back(gauss_kronrod_15(f, a, b));

  auto totals = [&] {
    CompensatedSum value;
    CompensatedSum error;
    for (const auto& p : heap) {
      value.add(p.value);
      error.add(p.error);
    }
    for (const auto& p : frozen) {
      value.add(p.value);
      error.add(p.error);
    }
    return std::pair{value.value(), error.value()};
  };

  int subdivisions = 1;
  double value = heap.front().value;
  double error = heap.front().error;
  while (true) {
    if (error <= std::max(spec.rel_tol * std::abs(value), spec.abs_tol))
      return {value, error, subdivisions};
    if (heap.empty()) break;
    if (subdivisions >= spec.max_subdivisions)
      throw ConvergenceError("adaptive_quad: subdivision budget exhausted", value, error);

    std::pop_heap(heap.begin(), heap.end());
    const Panel worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a) || !(mid < worst.b) ||
        (worst.b - worst.a) < 64.0 * std::numeric_limits<double>::epsilon() * std::abs(mid)) {
      frozen.push_back(worst);
    } else {
      heap.push_back(gauss_kronrod_15(f, worst.a, mid));
      std::push_heap(heap.begin(), heap.end());
      heap.push_back(gauss_kronrod_15(f, mid, worst.b));
      std::push_heap(heap.begin(), heap.end());
      ++subdivisions;
    }
    std::tie(value, error) = totals();
  }
  throw ConvergenceError("adaptive_quad: roundoff limits the attainable accuracy", value, error);
}

}  // namespace detail

/// Integrate f over [a, b]; b may be +infinity, in which case the range is
/// mapped onto [0, 1) with x = a + t/(1-t).
///
/// Throws ConvergenceError (carrying the best estimate) when the subdivision
/// budget runs out before max(rel_tol*|value|, abs_tol) is met.
template <class F>
QuadratureResult adaptive_quad(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  spec.validate();
  if (!std::isfinite(a)) throw DomainError("adaptive_quad: lower limit must be finite");
  if (std::isnan(b) || b < a) throw DomainError("adaptive_quad: require a <= b");
  if (a == b) return {0.0, 0.0, 0};

  if (std::isinf(b)) {
    auto mapped = [&f, a](double t) {
      const double s = 1.0 - t;
      const double v = f(a + t / s);
      return v / (s * s);
    };
    return detail::adaptive_quad_finite(mapped, 0.0, 1.0, spec);
  }
  return detail::adaptive_quad_finite(f, a, b, spec);
}

}  // namespace josephson::numerics
