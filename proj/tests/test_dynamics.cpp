#include <catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "josephson/dynamics.hpp"

using namespace josephson;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

ModelParams reference() { return {1.0, 1.0, 0.25, 0.0, 0.5, 1.0}; }

void check_matrix(const Matrix2& a, const Matrix2& b, double tol) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK_THAT(a[i][j], WithinAbs(b[i][j], tol));
}

}  // namespace

TEST_CASE("evolution matrix examples", "[dynamics]") {
  const auto p = reference();
  const double g = p.gamma();
  check_matrix(evolution_matrix(p, 0.0).entries, {{{1, 0}, {0, 1}}}, 0.0);
  check_matrix(evolution_matrix(p, std::numbers::pi / (4 * g)).entries,
               {{{0, 2 * g}, {-1 / (2 * g), 0}}}, 1e-15);
  check_matrix(evolution_matrix(p, std::numbers::pi / g).entries, {{{1, 0}, {0, 1}}}, 1e-12);
}

TEST_CASE("evolution matrix group properties", "[dynamics]") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dt(-50.0, 50.0);
  std::uniform_real_distribution<double> dg(0.05, 3.0);
  for (int i = 0; i < 500; ++i) {
    const auto p = reference().with_gamma(dg(rng));
    const double t = dt(rng);
    const double s = dt(rng);
    const auto mt = evolution_matrix(p, t);
    CHECK_THAT(mt.determinant(), WithinAbs(1.0, 1e-12));
    const double scale = std::max(2.0 * p.gamma(), 1.0 / (2.0 * p.gamma()));
    check_matrix(multiply(mt.entries, evolution_matrix(p, s).entries),
                 evolution_matrix(p, t + s).entries, 1e-12 * scale);
    check_matrix(evolution_matrix(p, t + std::numbers::pi / p.gamma()).entries, mt.entries, 1e-12 * scale);
  }
}

TEST_CASE("generator from finite differences", "[dynamics]") {
  for (double g : {0.1, 0.25, 1.0, 2.0}) {
    const auto p = reference().with_gamma(g);
    const double h = 1e-4 / (2.0 * g);
    const double w2 = 4.0 * g * g;
    const auto plus = evolution_matrix(p, h).entries;
    const auto minus = evolution_matrix(p, -h).entries;
    const Matrix2 expected{{{0.0, w2}, {-1.0, 0.0}}};
    // central: (M(h) - M(-h)) / 2h = G + O(h^2)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK_THAT((plus[i][j] - minus[i][j]) / (2.0 * h), WithinAbs(expected[i][j], 1e-6 * std::max(1.0, w2)));
    // forward: (M(h) - I) / h = G + (h/2) G^2 + O(h^2), with G^2 = -w2 I
    const Matrix2 forward{{{(plus[0][0] - 1.0) / h, plus[0][1] / h}, {plus[1][0] / h, (plus[1][1] - 1.0) / h}}};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const double second = i == j ? -0.5 * h * w2 : 0.0;
        CHECK_THAT(forward[i][j], WithinAbs(expected[i][j] + second, 1e-6 * std::max(1.0, w2)));
      }
  }
}

TEST_CASE("autocorrelation of the relative number", "[dynamics]") {
  const auto p = reference();
  const auto s = solve_equilibrium(p);
  const double var = relative_number_variance(p, s);
  CHECK_THAT(autocorrelation_n(p, s, 0.0), WithinRel(var, 1e-15));
  CHECK_THAT(autocorrelation_n(p, s, std::numbers::pi / (2 * p.gamma())), WithinRel(-var, 1e-12));
  CHECK_THAT(autocorrelation_n(p, s, 1.0), WithinAbs(1.4229, 1e-3));
  const auto grid = uniform_time_grid(2.0 * std::numbers::pi / p.gamma(), 512);
  REQUIRE(grid.size() == 512);
  const auto trace = autocorrelation_n_trace(p, s, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK_THAT(trace.values[i], WithinAbs(var * std::cos(2.0 * p.gamma() * grid[i]), 1e-10));
    CHECK_THAT(evolved_number_variance(p, s, grid[i]), WithinRel(var, 1e-12));
    CHECK_THAT(autocorrelation_j(p, s, grid[i]),
               WithinAbs(relative_current_variance(p, s) * std::cos(2.0 * p.gamma() * grid[i]), 1e-10));
  }
  const auto n = reference().with_rho(0.1);
  CHECK_THROWS_AS(autocorrelation_n(n, solve_equilibrium(n), 0.0), DegenerateStateError);
}

TEST_CASE("commutator scalar is conserved", "[dynamics]") {
  const auto p = reference();
  const auto s = solve_equilibrium(p);
  const double c = relative_commutator_scalar(p, s);
  CHECK_THAT(commutator_conservation(p, s, 0.0), WithinRel(c, 1e-15));
  CHECK_THAT(commutator_conservation(p, s, 0.7313), WithinRel(c, 1e-12));
  CHECK_THAT(commutator_conservation(p, s, 1e6 * std::numbers::pi / p.gamma() + 0.1), WithinRel(c, 1e-9));
}

TEST_CASE("phi-dependent current trace", "[dynamics]") {
  const auto grid = uniform_time_grid(30.0, 200);
  const auto p = reference();
  const auto s = solve_equilibrium(p);
  const auto zero = phi_current_trace(p, s, grid);
  for (double v : zero.values) CHECK(v == 0.0);
  const auto half = phi_current_trace(p.with_phi(std::numbers::pi / 2), s, grid);
  const double vj = relative_current_variance(p, s);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK_THAT(half.values[i], WithinAbs(vj * std::cos(0.5 * grid[i]), 1e-12 * vj));
  for (double phi : {std::numbers::pi / 6, std::numbers::pi / 4, 1.0, 2.0}) {
    const auto tr = phi_current_trace(p.with_phi(phi), s, grid);
    const double s2 = std::sin(phi) * std::sin(phi);
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (std::abs(half.values[i]) > 1e-8 * vj)
        CHECK_THAT(tr.values[i] / half.values[i], WithinAbs(s2, 1e-12));
  }
}

TEST_CASE("superposition signal", "[dynamics]") {
  const auto grid = uniform_time_grid(10.0, 11);
  const auto single = superposition_signal({{0.5, 1.0}}, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK_THAT(single.values[i], WithinAbs(std::cos(0.5 * grid[i]), 1e-15));

  // Beat: envelope cos(0.05 t) vanishes at t = pi / 0.1.
  const double t_collapse = std::numbers::pi / 0.1;
  const double times[] = {0.0, t_collapse, 2.0 * t_collapse};
  const auto beat = superposition_signal({{1.0, 0.5}, {1.1, 0.5}}, times);
  CHECK_THAT(beat.values[0], WithinAbs(1.0, 1e-15));
  CHECK(std::abs(beat.values[1]) < 1e-12);
  CHECK_THAT(std::abs(beat.values[2]), WithinAbs(1.0, 1e-12));

  // Equally spaced gaps revive at 2 pi / spacing.
  const double spacing = 0.3;
  std::map<double, double> comb;
  for (int n = 0; n < 8; ++n) comb[2.0 * spacing + n * spacing] = 0.125;
  const double revival[] = {0.0, 1.0, 2.0 * std::numbers::pi / spacing};
  const auto sig = superposition_signal(comb, revival);
  CHECK(std::abs(sig.values[1]) < 0.9);
  CHECK_THAT(sig.values[2], WithinAbs(sig.values[0], 1e-10));

  CHECK_THROWS_AS(superposition_signal({}, revival), DomainError);
  CHECK_THROWS_AS(superposition_signal({{1.0, -1.0}}, revival), DomainError);
}

TEST_CASE("time grids", "[dynamics]") {
  const auto g = uniform_time_grid(2.0, 5);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 2.0);
  CHECK_THROWS_AS(uniform_time_grid(2.0, 1), DomainError);
  CHECK_THROWS_AS(uniform_time_grid(-1.0, 5), DomainError);
  const double bad[] = {0.0, 1.0, 0.5};
  const auto p = reference();
  CHECK_THROWS_AS(autocorrelation_n_trace(p, solve_equilibrium(p), bad), DomainError);
}
