#include <doctest.h>

#include "fracvar/errors.hpp"
#include "fracvar/grid.hpp"
#include "oracle.hpp"

using namespace fracvar;

TEST_SUITE("grid_calculus") {

TEST_CASE("grid function basics") {
  const GridFunction f = GridFunction::sample(2.0, 8, [](double t) { return t * t; });
  CHECK(f.n_intervals() == 8);
  CHECK(f.spacing() == 0.25);
  CHECK(f.back() == 4.0);
  CHECK(reversed(f)[0] == 4.0);
  CHECK_THROWS_AS(GridFunction(1.0, Eigen::VectorXd::Constant(2, 0.0)), GridTooCoarse);
  Eigen::VectorXd bad = Eigen::VectorXd::Zero(9);
  bad[3] = std::nan("");
  CHECK_THROWS(GridFunction(1.0, bad));
  bad[3] = 0.0;
  bad[8] = INFINITY;
  CHECK_FALSE(GridFunction(1.0, bad).right_finite());
}

TEST_CASE("derivative") {
  const GridFunction lin = GridFunction::sample(1.0, 8, [](double t) { return t; });
  const GridFunction d1 = derivative(lin);
  for (int i = 0; i <= 8; ++i) CHECK(d1[i] == doctest::Approx(1.0).epsilon(1e-14));

  const GridFunction sq = GridFunction::sample(1.0, 8, [](double t) { return t * t; });
  const GridFunction d2 = derivative(sq);
  for (int i = 0; i <= 8; ++i) CHECK(d2[i] == doctest::Approx(2 * sq.node(i)).scale(1).epsilon(1e-13));

  const GridFunction s = GridFunction::sample(1.0, 256, [](double t) { return std::sin(t); });
  CHECK(oracle::sup_error(derivative(s), [](double t) { return std::cos(t); }, 0, 1) <= 1e-4);

  CHECK_THROWS_AS(derivative(GridFunction::constant(1.0, 3, 1.0)), GridTooCoarse);
}

TEST_CASE("kernel moments against antiderivatives") {
  CHECK(kernel_moment({-0.5, false}, 0.0, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(kernel_moment({0.0, true}, 0.0, 1.0) == doctest::Approx(-1.0).epsilon(1e-15));
  // ∫_1^2 s^0.3 ln s ds
  const double p = 1.3;
  const double ref = std::pow(2.0, p) * (std::log(2.0) / p - 1 / (p * p)) + 1 / (p * p);
  CHECK(kernel_moment({0.3, true}, 1.0, 2.0) == doctest::Approx(ref).epsilon(1e-14));
}

TEST_CASE("quadrature rules") {
  const GridFunction one = GridFunction::constant(1.0, 64, 1.0);
  CHECK(integrate(one) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(integrate(one, QuadratureRule::product_log()) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(integrate(one, QuadratureRule::product_abel(0.5)) == doctest::Approx(2.0).epsilon(1e-13));
  // ∫ -ln(1-τ)(1-τ)^(-e) = 1/(1-e)²
  CHECK(integrate(one, QuadratureRule::product_log(0.3)) ==
        doctest::Approx(1 / (0.7 * 0.7)).epsilon(1e-12));
  CHECK_THROWS(QuadratureRule::product_abel(1.0));

  // a flagged right endpoint is extrapolated, not summed
  Eigen::VectorXd v = Eigen::VectorXd::Ones(65);
  v[64] = INFINITY;
  const GridFunction flagged(1.0, v);
  CHECK_THROWS_AS(integrate(flagged), SingularEndpointError);
  CHECK(integrate(flagged, QuadratureRule::product_abel(0.5)) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("abel convolution") {
  const GridFunction one = GridFunction::constant(1.0, 128, 1.0);
  const GridFunction c = abel_convolution(one, 0.5, Side::left);
  CHECK(oracle::sup_error(c, [](double t) { return 2 * std::sqrt(t); }, 0, 1) <= 1e-12);
  const GridFunction r = abel_convolution(one, 0.5, Side::right);
  CHECK(oracle::sup_error(r, [](double t) { return 2 * std::sqrt(1 - t); }, 0, 1) <= 1e-12);
  const GridFunction zero = abel_convolution(GridFunction::constant(1.0, 128, 0.0), 0.3, Side::left);
  CHECK(zero.values().cwiseAbs().maxCoeff() == 0.0);
  const GridFunction lin = GridFunction::sample(1.0, 128, [](double t) { return t; });
  const GridFunction k0 = abel_convolution(lin, 0.0, Side::left);
  CHECK(oracle::sup_error(k0, [](double t) { return t * t / 2; }, 0, 1) <= 1e-12);
}

TEST_CASE("left convolution matches the direct panel sum") {
  const GridFunction y = GridFunction::sample(1.0, 32, [](double t) { return std::exp(t); });
  const PanelLinear p = interpolant_panels(y);
  const PowerLogKernel k{-0.4, true};
  const Eigen::VectorXd all = left_convolution(p, y.spacing(), k);
  CHECK(all[32] == doctest::Approx(left_convolution_last(p, y.spacing(), k)).epsilon(1e-13));
}

TEST_CASE("singular integrals") {
  // s^(-0.6) at the right end, log-singular at the left
  const auto f = [](double t) {
    return t == 1.0 ? INFINITY : std::pow(1 - t, -0.6) + (t == 0 ? -INFINITY : std::log(t));
  };
  const double exact = 1 / 0.4 - 1.0;
  EndpointModels m;
  m.left = EndpointModel{0.0, true};
  m.right = EndpointModel{0.6, false};
  double prev = INFINITY;
  for (int n : {256, 1024, 4096}) {
    const GridFunction g = GridFunction::sample(1.0, n, f);
    const double e = std::abs(integrate_singular(g, m) - exact);
    CHECK(e <= 1e-4);
    CHECK(e < prev / 8);  // second order
    prev = e;
    // estimated exponents, first order at best
    CHECK(integrate_singular(g) == doctest::Approx(exact).epsilon(1e-2));
  }
  const GridFunction bad =
      GridFunction::sample(1.0, 256, [](double t) { return t == 1.0 ? INFINITY : 1 / (1 - t); });
  CHECK_THROWS_AS(integrate_singular(bad, {std::nullopt, EndpointModel{1.0, false}}),
                  NonIntegrableError);
}

}
