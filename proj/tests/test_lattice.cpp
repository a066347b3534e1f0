#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "josephson/lattice.hpp"

using namespace josephson;
using namespace josephson::lattice;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

ModelParams reference() { return {1.0, 1.0, 0.25, 0.0, 0.5, 1.0}; }

std::vector<double> boxes(const ModelParams& p) {
  const double f[] = {10.0, 20.0, 40.0};
  return thermal_box_sequence(p, f);
}

}  // namespace

TEST_CASE("mode census matches a triple loop", "[lattice]") {
  const auto p = reference();
  const LatticeSpec spec{2.0 * std::numbers::pi, 12.5};
  const auto modes = lattice_integer_modes(spec, p);
  std::size_t census = 0;
  for (int x = -6; x <= 6; ++x)
    for (int y = -6; y <= 6; ++y)
      for (int z = -6; z <= 6; ++z) {
        const int n2 = x * x + y * y + z * z;
        if (n2 > 0 && 0.5 * n2 <= 12.5) ++census;
      }
  CHECK(modes.size() == census);
  CHECK(lattice_modes(spec, p).size() == census);
  for (std::size_t i = 1; i < modes.size(); ++i) CHECK(modes[i].norm2() >= modes[i - 1].norm2());
}

TEST_CASE("smallest lattice momentum", "[lattice]") {
  const auto p = reference();
  const LatticeSpec spec{13.0};
  const auto modes = lattice_modes(spec, p);
  double smallest = kInfinity;
  for (const auto& k : modes) smallest = std::min(smallest, k.norm());
  CHECK_THAT(smallest, WithinRel(2.0 * std::numbers::pi / 13.0, 1e-15));
  CHECK_THAT(modes.front().norm(), WithinRel(smallest, 1e-15));
}

TEST_CASE("lattice errors", "[lattice]") {
  const auto p = reference();
  CHECK_THROWS_AS(lattice_modes(LatticeSpec{1.0, 1.0}, p), EmptyLatticeError);
  CHECK_THROWS_AS(lattice_modes(LatticeSpec{-1.0}, p), DomainError);
  CHECK_THROWS_AS(lattice_coordinates(LatticeSpec{10.0}, Momentum{0.5, 0, 0}), DomainError);
  const auto c = lattice_coordinates(LatticeSpec{10.0}, Momentum{2.0 * std::numbers::pi / 10.0 * 3, 0, 0});
  CHECK(c.x == 3);
  const auto s = solve_equilibrium(p);
  const double two[] = {10.0, 20.0};
  CHECK_THROWS_AS(convergence_report(Quantity::density, p, s, two), DomainError);
  const double unsorted[] = {10.0, 30.0, 20.0};
  CHECK_THROWS_AS(convergence_report(Quantity::density, p, s, unsorted), DomainError);
  const auto n = reference().with_rho(0.1);
  CHECK_THROWS_AS(lattice_c_rel(n, solve_equilibrium(n), LatticeSpec{10.0}), DegenerateStateError);
}

TEST_CASE("ground-state lattice values are exact", "[lattice]") {
  const auto g = reference().with_beta(kInfinity);
  const auto s = solve_equilibrium(g);
  const LatticeSpec spec{20.0};
  CHECK(lattice_density(g, s, spec) == s.rho0);
  CHECK(lattice_c_rel(g, s, spec) == s.rho0 / g.gamma());
  CHECK(lattice_rel_number_variance(g, s, spec) == s.rho0);
  const Momentum k{2.0 * std::numbers::pi / 20.0, 0, 0};
  CHECK(lattice_total_phase_variance(g, s, spec, k) == 0.5);
  CHECK(lattice_total_number_variance(g, s, spec, k) == s.rho0 / 2.0);
}

TEST_CASE("density and c_rel converge with decreasing error", "[lattice]") {
  const auto p = reference();
  const auto s = solve_equilibrium(p);
  const auto L = boxes(p);
  const auto density = convergence_report(Quantity::density, p, s, L, {}, 4);
  CHECK(density.errors_decreasing);
  CHECK(density.verdict);
  const auto c = convergence_report(Quantity::c_rel, p, s, L, {}, 4);
  CHECK(c.errors_decreasing);
  const auto v = convergence_report(Quantity::rel_number_variance, p, s, L, {}, 4);
  CHECK(v.errors_decreasing);
  // The error is a 1/L finite-size correction; extrapolation removes most of it.
  CHECK(std::abs(c.extrapolated - c.rows.back().closed_form) < 0.1 * c.rows.back().abs_err);
}

TEST_CASE("c_rel convergence verdict at 10, 20, 40 thermal wavelengths", "[lattice]") {
  const auto p = reference();
  const auto s = solve_equilibrium(p);
  const auto c = convergence_report(Quantity::c_rel, p, s, boxes(p), {}, 4);
  CHECK(c.final_relative_error < 1e-2);
  CHECK(c.verdict);
  const auto v = convergence_report(Quantity::rel_number_variance, p, s, boxes(p), {}, 4);
  CHECK(v.final_relative_error < 1e-2);
}

TEST_CASE("phase variance is exact at every L", "[lattice]") {
  const auto p = reference();
  const auto s = solve_equilibrium(p);
  const double L0 = 2.0 * std::numbers::pi / std::sqrt(2.0);
  const Momentum k{std::sqrt(2.0), 0, 0};
  CHECK_THAT(lattice_total_phase_variance(p, s, LatticeSpec{L0}, k), WithinAbs(1.081977, 1e-6));
  const double Ls[] = {L0, 2 * L0, 4 * L0, 8 * L0};
  const auto r = convergence_report(Quantity::total_phase_variance, p, s, Ls, k);
  CHECK(r.exact);
  CHECK(r.verdict);
  for (const auto& row : r.rows) CHECK(row.abs_err <= 1e-14 * row.closed_form);
}

TEST_CASE("total number variance converges to the quadrature value", "[lattice]") {
  const auto p = reference();
  const auto s = solve_equilibrium(p);
  const auto L = boxes(p);
  const Momentum k{2.0 * std::numbers::pi / L.front(), 0, 0};
  const auto r = convergence_report(Quantity::total_number_variance, p, s, L, k, 4);
  CHECK(r.errors_decreasing);
}

TEST_CASE("pair summand symmetry under p -> -p-k", "[lattice]") {
  const auto p = reference();
  const auto s = solve_equilibrium(p);
  const LatticeSpec spec{8.0};
  const auto modes = lattice_integer_modes(spec, p);
  const IntegerMode kn{1, 2, 0};
  auto n_of = [&](const IntegerMode& m) {
    const double eps = dispersion(p, Momentum{2 * std::numbers::pi / 8.0 * m.x, 2 * std::numbers::pi / 8.0 * m.y,
                                              2 * std::numbers::pi / 8.0 * m.z});
    const auto e = branch_energies_from_gap(p, s.delta, eps);
    return std::pair{occupation(e.minus, 1.0), occupation(e.plus, 1.0)};
  };
  for (const auto& m : modes) {
    const IntegerMode q{m.x + kn.x, m.y + kn.y, m.z + kn.z};
    const IntegerMode mirror{-m.x - kn.x, -m.y - kn.y, -m.z - kn.z};
    const IntegerMode mirror_q{-m.x, -m.y, -m.z};
    if (q.norm2() == 0) continue;
    const auto [a_minus, a_plus] = n_of(m);
    const auto [b_minus, b_plus] = n_of(q);
    const auto [c_minus, c_plus] = n_of(mirror);
    const auto [d_minus, d_plus] = n_of(mirror_q);
    CHECK_THAT(number_pair_summand(a_minus, b_minus), WithinRel(number_pair_summand(c_minus, d_minus), 1e-12));
    CHECK_THAT(number_pair_summand(a_plus, b_plus), WithinRel(number_pair_summand(c_plus, d_plus), 1e-12));
  }
}

TEST_CASE("summation order does not matter", "[lattice]") {
  const auto p = reference();
  const auto s = solve_equilibrium(p);
  const LatticeSpec spec{6.0 * p.thermal_wavelength()};
  const auto modes = lattice_modes(spec, p);
  std::vector<double> terms;
  terms.reserve(modes.size());
  for (const auto& k : modes) {
    const auto e = branch_energies_from_gap(p, s.delta, dispersion(p, k));
    terms.push_back(occupation(e.minus, 1.0) + occupation(e.plus, 1.0));
  }
  const double sorted = numerics::compensated_sum(terms);
  std::reverse(terms.begin(), terms.end());
  const double reversed = numerics::compensated_sum(terms);
  CHECK_THAT(sorted, WithinRel(reversed, 1e-13));
  const double engine = lattice_density(p, s, spec, 3) - s.rho0;
  CHECK_THAT(engine * spec.volume(), WithinRel(sorted, 1e-13));
  CHECK(lattice_density(p, s, spec, 1) == lattice_density(p, s, spec, 7));
}

TEST_CASE("cutoff insensitivity", "[lattice]") {
  const auto p = reference();
  const auto s = solve_equilibrium(p);
  const double L = 8.0 * p.thermal_wavelength();
  const double a = lattice_density(p, s, LatticeSpec{L, 40.0}, 4);
  const double b = lattice_density(p, s, LatticeSpec{L, 80.0}, 4);
  CHECK_THAT(a, WithinRel(b, 1e-10));
  const double c = lattice_rel_number_variance(p, s, LatticeSpec{L, 40.0}, 4);
  const double d = lattice_rel_number_variance(p, s, LatticeSpec{L, 80.0}, 4);
  CHECK_THAT(c, WithinRel(d, 1e-10));
}

TEST_CASE("condensate bookkeeping", "[lattice]") {
  const auto p = reference();
  const auto s = solve_equilibrium(p);
  const double L = 5.0 * p.thermal_wavelength();
  const double with = lattice_density(p, s, LatticeSpec{L, 40.0, true}, 2);
  const double without = lattice_density(p, s, LatticeSpec{L, 40.0, false}, 2);
  CHECK(without + s.rho0 == with);
}

TEST_CASE("'+' branch is suppressed at large gamma", "[lattice]") {
  const auto base = reference();
  const double L = 5.0 * base.thermal_wavelength();
  const auto p_small = base.with_gamma(5.0).with_rho(2.0);
  const auto p_large = base.with_gamma(8.0).with_rho(2.0);
  for (const auto& p : {p_small, p_large}) {
    const auto s = solve_equilibrium(p);
    const LatticeSpec spec{L};
    const double plus = lattice_density(p, s, LatticeSpec{L, 40.0, false}) -
                        p.gamma() * (lattice_c_rel(p, s, spec) - s.rho0 / p.gamma());
    const double bound = std::exp(-2.0 * p.beta() * p.gamma()) * lattice_modes(spec, p).size() / spec.volume();
    CHECK(plus / 2.0 < bound);
  }
}

TEST_CASE("phi commutator from bare two-point functions", "[lattice]") {
  const auto s = solve_equilibrium(reference());
  const LatticeSpec spec{5.0 * reference().thermal_wavelength()};
  for (double phi : {0.0, 0.5, 1.0, std::numbers::pi / 2, 4.0}) {
    const auto p = reference().with_phi(phi);
    const double expected = lattice_c_rel(p, s, spec, 2) * std::sin(phi);
    CHECK_THAT(lattice_phi_commutator(p, s, spec, 2), WithinAbs(expected, 1e-12));
  }
}

TEST_CASE("per-mode identity inside the relative variance", "[lattice]") {
  const auto p = reference();
  const auto s = solve_equilibrium(p);
  const LatticeSpec spec{4.0 * p.thermal_wavelength()};
  CHECK_NOTHROW(lattice_rel_number_variance(p, s, spec, 2));
  CHECK_THAT(lattice_rel_number_variance(p, s, spec, 2),
             WithinRel(lattice_c_rel(p, s, spec, 2) * p.gamma() / std::tanh(p.gamma()), 1e-12));
}
