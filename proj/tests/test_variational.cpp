#include <doctest.h>

#include <random>

#include "fracvar/errors.hpp"
#include "fracvar/fractional.hpp"
#include "fracvar/scenarios.hpp"
#include "fracvar/variational.hpp"
#include "oracle.hpp"

using namespace fracvar;

namespace {

LagrangianSpec constant_lagrangian(double v) {
  LagrangianSpec L;
  L.name = "const";
  L.evaluate = [v](double, double, double, double) { return v; };
  L.partial_y = L.partial_d = L.partial_alpha = [](double, double, double, double) { return 0.0; };
  return L;
}

LagrangianSpec d_squared() {
  LagrangianSpec L;
  L.name = "d2";
  L.evaluate = [](double, double, double d, double) { return d * d; };
  L.partial_d = [](double, double, double d, double) { return 2 * d; };
  L.partial_y = L.partial_alpha = [](double, double, double, double) { return 0.0; };
  return L;
}

LagrangianSpec tracking_lagrangian() {
  LagrangianSpec L;
  L.name = "tracking";
  L.evaluate = [](double t, double y, double, double) { return (y - t) * (y - t); };
  L.partial_y = [](double t, double y, double, double) { return 2 * (y - t); };
  L.partial_d = L.partial_alpha = [](double, double, double, double) { return 0.0; };
  return L;
}

}  // namespace

TEST_SUITE("variational_core") {

TEST_CASE("partials of the scenario Lagrangians") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> t(0.05, 0.95), v(-2.0, 2.0), a(0.05, 0.45);
  const std::vector<LagrangianSpec> specs = {
      inertial_lagrangian(), regularized_lagrangian(0.3), constant_force_lagrangian(1.5),
      primary_constraint_lagrangian(2.0), quadratic_potential_lagrangian(1.0, -0.5),
      log_potential_lagrangian(0.7)};
  for (const auto& L : specs)
    for (int k = 0; k < 50; ++k) {
      const double y = v(rng);
      CHECK(partials_defect(L, t(rng), std::abs(y) < 0.1 ? 0.5 : y, v(rng), a(rng)) <= 1e-6);
    }
}

TEST_CASE("action") {
  // kernel path: D ≡ 0
  const PathSample k =
      sample_path(AnalyticPath(1.0, {{1.0, 0.3 - 1.0, PathSide::from_left}}), 0.3, 512);
  CHECK(action(k, d_squared()) == 0.0);

  const PathSample p = primary_constraint_path(1.0, 0.25, 2048);
  CHECK(action(p, primary_constraint_lagrangian(1.0)) == doctest::Approx(1.0).epsilon(1e-3));
  const PathSample p0 = primary_constraint_path(1.0, 0.0, 2048);
  CHECK(action(p0, primary_constraint_lagrangian(1.0)) == doctest::Approx(0.5).epsilon(1e-3));

  const GridFunction y = GridFunction::sample(1.0, 256, [](double s) { return s * s; });
  CHECK(action(y, 0.5, constant_lagrangian(0.0)) == 0.0);
  CHECK(action(y, 0.5, constant_lagrangian(2.0)) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("boundary conditions") {
  LagrangianSpec L = constant_lagrangian(1.0);
  L.boundary_conditions = {{Endpoint::left, 0.0}, {Endpoint::right, 1.0}};
  CHECK_NOTHROW(check_boundary(GridFunction::sample(1.0, 64, [](double s) { return s; }), L));
  CHECK_THROWS_AS(check_boundary(GridFunction::sample(1.0, 64, [](double s) { return s + 0.1; }), L),
                  BoundaryViolation);
}

TEST_CASE("beta action") {
  const GridFunction y = GridFunction::sample(1.0, 512, [](double s) { return std::sin(3 * s); });
  const LagrangianSpec L = constant_force_lagrangian(1.0);
  CHECK(beta_action(y, 0.4, 1.0, L) == action(y, 0.4, L));
  for (double b : {0.75, 1.5})
    CHECK(beta_action(y, 0.4, b, constant_lagrangian(1.0)) ==
          doctest::Approx(1 / oracle::tgamma(b + 1)).epsilon(1e-6));
  CHECK(beta_action(y, 0.4, 0.75, constant_lagrangian(0.0)) == 0.0);
}

TEST_CASE("Euler-Lagrange residual") {
  const PathSample s = constant_force_path(1.0, 0.5, 1024);
  CHECK(sup_norm(el_residual_y(s, constant_force_lagrangian(1.0)), 0.05, 0.95) <= 5e-2);

  // linear in D: residual = tD1^α c + f'(y)
  const double a = 0.35;
  const GridFunction y = GridFunction::sample(1.0, 512, [](double t) { return 1 + t; });
  const GridFunction r = el_residual_y(y, a, quadratic_potential_lagrangian(2.0, 3.0));
  const auto expect = [a](double t) {
    return 2.0 / (oracle::tgamma(1 - a) * std::pow(1 - t, a)) + 3.0 * (1 + t);
  };
  CHECK(oracle::sup_error(r, expect, 0, 0.99) <= 1e-9);

  CHECK(el_residual_y(y, a, constant_lagrangian(0.0)).values().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("alpha condition") {
  const GridFunction y = GridFunction::sample(1.0, 256, [](double t) { return t; });
  CHECK(alpha_condition(y, 0.3, tracking_lagrangian()) == 0.0);

  // log potential at the root of ψ(1-α) + 1: the reduced integral vanishes
  const double root = 0.21499667462588;
  const GridFunction one = GridFunction::constant(1.0, 1024, 1.0);
  const double reduced = oracle::digamma(1 - root) * integrate(one) +
                         integrate(one, QuadratureRule::product_log());
  CHECK(std::abs(reduced) <= 1e-8);
  // the same condition through the path and its sensitivity field
  const PathSample s = log_potential_path(1.0, root, 2048);
  CHECK(std::abs(alpha_condition(s, log_potential_lagrangian(1.0))) <= 5e-4);
}

TEST_CASE("total derivative in the order") {
  const LagrangianSpec L3 = primary_constraint_lagrangian(1.0);
  const PathFamily f3 = [](double a) { return primary_constraint_path(1.0, a, 2048); };
  CHECK(dI_dalpha(f3, 0.25, L3) == doctest::Approx(4.0).epsilon(2e-2));

  const LagrangianSpec L2 = constant_force_lagrangian(1.0);
  const PathFamily f2 = [](double a) { return constant_force_path(1.0, a, 1024); };
  for (double a : {0.1, 0.5, 0.9}) CHECK(dI_dalpha(f2, a, L2) > 0.0);

  const PathFamily fixed = [](double a) {
    return sample_path(GridFunction::sample(1.0, 256, [](double t) { return t; }), a);
  };
  CHECK(dI_dalpha(fixed, 0.4, tracking_lagrangian()) == 0.0);

  const PathFamily wrong = [](double a) {
    return sample_path(GridFunction::sample(1.0, 256, [](double t) { return 0.0 * t; }), a);
  };
  CHECK_THROWS_AS(dI_dalpha(wrong, 0.4, L2), StationarityViolation);
}

TEST_CASE("integration by parts") {
  const auto f = [](double t) { return t * (1 - t); };
  const auto g = [](double t) { return 1 - t; };
  double prev = INFINITY;
  for (int n : {512, 1024, 2048}) {
    const double d = std::abs(int_by_parts_defect(GridFunction::sample(1.0, n, f),
                                                  GridFunction::sample(1.0, n, g), 0.4));
    CHECK(d < prev);
    prev = d;
  }
  CHECK(prev <= 1e-3);
  const GridFunction zero = GridFunction::constant(1.0, 256, 0.0);
  CHECK(int_by_parts_defect(zero, GridFunction::sample(1.0, 256, g), 0.4) == 0.0);
  CHECK(int_by_parts_defect(GridFunction::sample(1.0, 256, f), GridFunction::sample(1.0, 256, g), 0.0) ==
        0.0);
  CHECK_THROWS_AS(int_by_parts_defect(GridFunction::constant(1.0, 64, 1.0), GridFunction::sample(1.0, 64, g),
                                      0.4),
                  BoundaryViolation);
}

TEST_CASE("stationarity report") {
  const StationarityReport r =
      evaluate_stationarity(primary_constraint_path(1.0, 0.2, 1024), primary_constraint_lagrangian(1.0));
  CHECK(r.action_value == doctest::Approx(1 / (2 * 0.6)).epsilon(1e-3));
  REQUIRE(r.el_residual);
  CHECK(r.el_residual_norm <= 1e-6);
}

}
