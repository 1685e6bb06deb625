#include <doctest.h>

#include "fracvar/errors.hpp"
#include "fracvar/fractional.hpp"
#include "fracvar/sensitivity.hpp"
#include "oracle.hpp"

using namespace fracvar;

TEST_SUITE("order_sensitivity") {

TEST_CASE("f1 kernel") {
  CHECK(f1_kernel(1.0, 0.0) == doctest::Approx(-oracle::euler_gamma).epsilon(1e-14));
  const double t0 = std::exp(oracle::digamma(1 - 0.35));
  CHECK(std::abs(f1_kernel(t0, 0.35)) <= 1e-13);
  const double ref = std::pow(0.5, -0.25) / oracle::tgamma(0.75) * (oracle::digamma(0.75) - std::log(0.5));
  CHECK(f1_kernel(0.5, 0.25) == doctest::Approx(ref).epsilon(1e-14));
}

TEST_CASE("kernel formula") {
  const GridFunction zero = GridFunction::constant(1.0, 128, 0.0);
  CHECK(dalpha_rl(zero, 0.5).field.values().cwiseAbs().maxCoeff() == 0.0);

  const GridFunction t = GridFunction::sample(1.0, 2048, [](double s) { return s; });
  const double h = 1e-4;
  const double fd = (rl_left(t, 0.5 + h).back() - rl_left(t, 0.5 - h).back()) / (2 * h);
  CHECK(std::abs(dalpha_rl(t, 0.5).field.back() - fd) <= 1e-4);

  // α-derivative of the Euler formula at t = 1: Γ(1.7)ψ(1.4)/Γ(1.4)
  const GridFunction p = GridFunction::sample(1.0, 2048, [](double s) { return std::pow(s, 0.7); });
  const double ref = oracle::tgamma(1.7) * oracle::digamma(1.4) / oracle::tgamma(1.4);
  CHECK(dalpha_rl(p, 0.3).field.back() == doctest::Approx(ref).epsilon(2e-3));
}

TEST_CASE("limit at zero") {
  CHECK(dalpha_at_zero(GridFunction::constant(1.0, 64, 0.0), 0.0).field.values().cwiseAbs().maxCoeff() == 0.0);
  const GridFunction t = GridFunction::sample(1.0, 1024, [](double s) { return s; });
  const SensitivityField g = dalpha_at_zero(t, 0.0);
  CHECK(g.field.back() == doctest::Approx(1.0 - oracle::euler_gamma).epsilon(1e-12));
  CHECK(g.method == SensitivityMethod::limit_zero);
  REQUIRE(g.alternate);

  const GridFunction y = GridFunction::sample(1.0, 2048, [](double s) { return std::cos(s) * s; });
  const GridFunction fwd = (1 / 1e-3) * (rl_left(y, 1e-3) - y);
  CHECK(oracle::sup_diff(dalpha_at_zero(y, 0.0).field, fwd, 0.1, 1) <= 5e-3);
}

TEST_CASE("limit at one") {
  CHECK(dalpha_at_one(GridFunction::constant(1.0, 64, 0.0), 0, 0).field.values().cwiseAbs().maxCoeff() == 0.0);
  const GridFunction sq = GridFunction::sample(1.0, 2048, [](double s) { return s * s; });
  const SensitivityField g = dalpha_at_one(sq, 0.0, 0.0);
  CHECK(oracle::sup_error(g.field,
                          [](double s) {
                            return s == 0 ? 0.0 : -2 * oracle::euler_gamma * s - 2 * s * (std::log(s) - 1);
                          },
                          0.01, 1) <= 1e-4);
  REQUIRE(g.alternate);
  CHECK(oracle::sup_diff(*g.alternate, g.field, 0.1, 1) <= 1e-3);

  const GridFunction y = GridFunction::sample(1.0, 2048, [](double s) { return std::sin(2 * s); });
  const GridFunction bwd = (1 / 1e-3) * (derivative(y) - rl_left(y, 1 - 1e-3));
  CHECK(oracle::sup_diff(dalpha_at_one(y, 0.0, 2.0).field, bwd, 0.1, 1) <= 5e-3);
  CHECK_THROWS_AS(dalpha_at_one(GridFunction::constant(1.0, 8, 1.0), 1.0, 0.0), GridTooCoarse);
}

TEST_CASE("dispatch and limit consistency") {
  const GridFunction y = GridFunction::sample(1.0, 1024, [](double s) { return s * s + s; });
  CHECK(order_sensitivity(y, 0.0).method == SensitivityMethod::limit_zero);
  CHECK(order_sensitivity(y, 1.0).method == SensitivityMethod::limit_one);
  CHECK(order_sensitivity(y, 0.4).method == SensitivityMethod::kernel_formula);

  const GridFunction g0 = dalpha_at_zero(y, 0.0).field;
  double prev = INFINITY;
  for (double a : {0.05, 0.02, 0.01}) {
    const double e = oracle::sup_diff(dalpha_rl(y, a).field, g0, 0.1, 1);
    CHECK(e < prev);
    prev = e;
  }
  const GridFunction g1 = dalpha_at_one(y, 0.0, 1.0).field;
  prev = INFINITY;
  for (double a : {0.95, 0.98, 0.99}) {
    const double e = oracle::sup_diff(dalpha_rl(y, a).field, g1, 0.1, 1);
    CHECK(e < prev);
    prev = e;
  }
}

TEST_CASE("expansion") {
  CHECK(expansion_check(1.5, 0.5, 0.0) == 0.0);
  const double d2 = std::abs(expansion_check(1.5, 0.5, 0.02));
  const double d1 = std::abs(expansion_check(1.5, 0.5, 0.01));
  CHECK(d1 <= 1e-3);
  CHECK(d2 / d1 >= 3.5);
}

TEST_CASE("f1 convolution") {
  // ∫_0^1 f1(1-τ, α) dτ = (ψ(1-α) + 1/(1-α)) / Γ(2-α)
  const GridFunction one = GridFunction::constant(1.0, 1024, 1.0);
  const double a = 0.3;
  const double ref = (oracle::digamma(1 - a) + 1 / (1 - a)) / oracle::tgamma(2 - a);
  CHECK(f1_convolution_at_end(one, a) == doctest::Approx(ref).epsilon(1e-10));
}

}
