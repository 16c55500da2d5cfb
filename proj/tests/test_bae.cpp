#include <doctest.h>

#include <cmath>
#include <numbers>

#include "zeroroot/bae.hpp"

using namespace zeroroot;

namespace {

ModelParams point(double p, double qb, int two_n = 8) {
  ModelParams m;
  m.two_n = two_n;
  m.a_bar = 0.66;
  m.xi = 1.2;
  m.p = p;
  m.q = qb * std::sqrt(1 + 1.44);
  return m;
}

ZeroRootSet ed_ground(const ModelParams& p) {
  const auto ev = diagonalize(p);
  return extract_zero_roots(spectral_polynomial(ev.front().state, p), p);
}

}  // namespace

TEST_CASE("regime boxes") {
  CHECK(regime_of(1.2, 0.7) == Regime::V);
  CHECK(regime_of(0.3, 0.7) == Regime::III);
  CHECK(regime_of(0.0, 0.0) == Regime::I);
  CHECK(regime_of(0.1, -0.2) == Regime::II);
  CHECK(regime_of(1.2, -0.2) == Regime::IV);
  CHECK(regime_of(0.2, -0.9) == Regime::IV);
  CHECK(regime_of(0.8, -0.8) == Regime::VI);
  CHECK(regime_of(0.8, 0.2) == Regime::III);
  CHECK_THROWS_AS(regime_of(-0.1, 0.2), DomainError);
  CHECK(parse_regime("IV") == Regime::IV);
  CHECK_THROWS_AS(parse_regime("VII"), ParamError);
}

TEST_CASE("inventories count 2N+1 representatives") {
  const ModelParams p = point(0.1, 0.4);
  for (Regime r : {Regime::I, Regime::II, Regime::III, Regime::IV, Regime::V, Regime::VI}) {
    const BaeState s = seed_roots(r, p);
    CHECK(s.zbar().size() == 9);
  }
  CHECK(inventory_for(Regime::I, p).quartets == 3);
  CHECK(inventory_for(Regime::IV, p).quartets == 4);
  CHECK(inventory_for(Regime::IV, p).boundary.size() == 1);
  CHECK(inventory_for(Regime::VI, p).imag_pair);
}

TEST_CASE("energy contribution of a root at the origin") {
  ModelParams p;
  p.two_n = 4;
  ZeroRootSet r;
  r.two_n = 4;
  r.params = p;
  r.z = {cplx(0, 0)};
  // a_1(0) twice, scaled, minus the constant
  const double e = energy_from_roots(r, p);
  CHECK(e + c0_constant(p) == doctest::Approx(std::numbers::pi * 4.0 / std::numbers::pi));
}

TEST_CASE("ED roots satisfy the BAEs") {
  const ModelParams p = point(1.2, 0.7);
  const auto roots = ed_ground(p);
  CHECK(max_abs(bae_residual(roots, p)) <= 1e-6);
  ZeroRootSet moved = roots;
  moved.z[2] += 0.1;
  CHECK(max_abs(bae_residual(moved, p)) > 1e-2);
}

TEST_CASE("BAE residual fails on a non-root") {
  const ModelParams p = point(1.2, 0.7, 4);
  const ZeroRootSet r = roots_from_zbar({0.3, 0.6, 0.9, 1.2, 1.5}, p);
  CHECK(max_abs(bae_residual(r, p)) > 0.1);
}

TEST_CASE("small instance solved to full accuracy") {
  const ModelParams p = point(1.2, 0.7, 4);
  const auto gs = solve_ground_state(p);
  CHECK(gs.solution.residual <= 1e-10);
  CHECK(gs.energy == doctest::Approx(diagonalize(p).front().energy).epsilon(1e-10));
}

TEST_CASE("regime V solve matches ED") {
  const ModelParams p = point(1.2, 0.7);
  const auto gs = solve_ground_state(p);
  CHECK(gs.solution.residual <= 1e-10);
  CHECK(std::abs(gs.energy - diagonalize(p).front().energy) <= 1e-8);
  const auto pat = classify_pattern(gs.solution.roots, p);
  CHECK(pat.regime == Regime::V);
  CHECK(pat.pair_centers.size() == 8);
  CHECK(pat.real_pair.has_value());
  CHECK(pat.boundary_pairs.empty());
}

TEST_CASE("single quantile seed converges in regime IV") {
  const ModelParams p = point(1.2, -0.2);
  const auto sol = solve_bae(seed_roots(Regime::IV, p, SeedStyle::quantile), p);
  CHECK(sol.residual <= 1e-10);
}

TEST_CASE("homotopy lands on the direct solve") {
  const ModelParams p = point(1.2, 0.7);
  const auto direct = solve_ground_state(p);
  SolveOptions opts;
  opts.homotopy_steps = 8;
  const auto ramp = solve_bae(direct.solution.state, p, opts);
  for (std::size_t i = 0; i < ramp.state.x.size(); ++i)
    CHECK(ramp.state.x[i] == doctest::Approx(direct.solution.state.x[i]).epsilon(1e-8));
}

TEST_CASE("inhomogeneous solve keeps the pattern") {
  ModelParams p = point(1.2, 0.7);
  p.theta_bar = spread_profile(8);
  const auto gs = solve_ground_state(p);
  CHECK(gs.solution.residual <= 1e-10);
  CHECK(classify_pattern(gs.solution.roots, p).regime == Regime::V);
  CHECK_THROWS_AS(energy_from_roots(gs.solution.roots, p), PreconditionError);
}

TEST_CASE("regime III pattern") {
  const ModelParams p = point(0.3, 0.7);
  const auto pat = classify_pattern(solve_ground_state(p).solution.roots, p);
  CHECK(pat.regime == Regime::III);
  CHECK(pat.pair_centers.size() == 6);
  REQUIRE(pat.boundary_values.size() == 1);
  CHECK(std::abs(pat.boundary_values[0] - 0.8) < 0.08);
  CHECK(pat.real_pair.has_value());
  CHECK(pat.imaginary_pair.has_value());
}

TEST_CASE("excitations are flagged") {
  const ModelParams p = point(0.3, 0.7);
  auto zb = solve_ground_state(p).solution.roots.z_bar();
  SUBCASE("boundary string") {
    for (auto& z : zb)
      if (std::abs(z.real()) < 1e-6 && std::abs(std::abs(z.imag()) - 0.8) < 0.08) z = cplx(0, 0.2);
    const auto pat = classify_pattern(roots_from_zbar(zb, p), p);
    CHECK(pat.boundary_strings.size() == 1);
    CHECK(pat.regime == Regime::excited);
  }
  SUBCASE("three string") {
    zb.push_back(cplx(0.7, 1.5));
    zb.push_back(cplx(0.7, -1.5));
    const auto pat = classify_pattern(roots_from_zbar(zb, p), p);
    REQUIRE(pat.extra_strings.size() == 1);
    CHECK(pat.extra_strings[0].first == 3);
    CHECK(pat.regime == Regime::excited);
  }
}

TEST_CASE("energies from roots reproduce the whole small spectrum") {
  const ModelParams p = point(1.2, 0.7, 4);
  const auto ev = diagonalize(p);
  for (const auto& e : ev) {
    const auto r = extract_zero_roots(spectral_polynomial(e.state, p), p);
    CHECK(std::abs(energy_from_roots(r, p) - e.energy) <= 1e-8);
  }
}

TEST_CASE("solver failure carries its history") {
  const ModelParams p = point(1.2, 0.7);
  SolveOptions opts;
  opts.max_iter = 1;
  try {
    solve_bae(seed_roots(Regime::V, p, SeedStyle::uniform), p, opts);
    CHECK(false);
  } catch (const SolverError& e) {
    CHECK(!e.history.empty());
    CHECK(e.best_iterate.size() == 9);
  }
}
