#include "fracvar/sensitivity.hpp"

#include <cmath>
#include <limits>

#include "fracvar/errors.hpp"
#include "fracvar/special_functions.hpp"

namespace fracvar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

GridFunction with_left_value(const GridFunction& y, double y_at_0) {
  if (y.front() == y_at_0) return y;
  Eigen::VectorXd v = y.values();
  v[0] = y_at_0;
  return y.with_values(std::move(v));
}

}  // namespace

const char* to_string(SensitivityMethod m) {
  switch (m) {
    case SensitivityMethod::kernel_formula: return "kernel_formula";
    case SensitivityMethod::limit_zero: return "limit_zero";
    case SensitivityMethod::limit_one: return "limit_one";
    case SensitivityMethod::finite_difference: return "finite_difference";
  }
  return "?";
}

double f1_kernel(double t, FractionalOrder a) {
  if (!(t > 0.0)) throw DomainError("f1 kernel needs t > 0");
  if (a.alpha >= 1.0) throw OrderOutOfRange("f1 kernel needs α < 1");
  return std::pow(t, -a.alpha) * reciprocal_gamma(1.0 - a.alpha) *
         (digamma(1.0 - a.alpha) - std::log(t));
}

SensitivityField dalpha_rl(const GridFunction& y, FractionalOrder a) {
  return dalpha_rl(y, a, y.front());
}

SensitivityField dalpha_rl(const GridFunction& y, FractionalOrder a, double y_at_0) {
  if (!(a.alpha > 0.0 && a.alpha < 1.0))
    throw OrderOutOfRange("kernel formula needs α in (0, 1); use the limit forms");
  const GridFunction yy = with_left_value(y, y_at_0);
  const double h = y.spacing();
  const double rg = reciprocal_gamma(1.0 - a.alpha);
  const double psi = digamma(1.0 - a.alpha);
  const PanelLinear dp = derivative_panels(yy);
  const Eigen::VectorXd plain = left_convolution(dp, h, {-a.alpha, false});
  const Eigen::VectorXd logk = left_convolution(dp, h, {-a.alpha, true});
  const int n = y.n_intervals();
  Eigen::VectorXd g(n + 1);
  for (int k = 1; k <= n; ++k) {
    const double t = y.node(k);
    const double tb = std::pow(t, -a.alpha);
    const double d = rg * (plain[k] + y_at_0 * tb);
    g[k] = psi * d - rg * (y_at_0 * std::log(t) * tb + logk[k]);
  }
  g[0] = y_at_0 == 0.0 ? 0.0 : std::copysign(kInf, y_at_0);
  return {y.with_values(std::move(g)), a.alpha, SensitivityMethod::kernel_formula, std::nullopt};
}

SensitivityField dalpha_at_zero(const GridFunction& y, double y_at_0) {
  const GridFunction yy = with_left_value(y, y_at_0);
  if (!yy.right_finite()) throw SingularEndpointError("α = 0 limit needs finite samples");
  const int n = y.n_intervals();
  const double h = y.spacing();
  const auto& v = yy.values();
  // ln(m / (m-1)) for the panel at distance m
  Eigen::VectorXd lr(n + 1);
  lr[0] = lr[1] = 0.0;
  for (int m = 2; m <= n; ++m) lr[m] = std::log1p(1.0 / (m - 1));

  Eigen::VectorXd g(n + 1);
  g[0] = y_at_0 == 0.0 ? 0.0 : std::copysign(kInf, y_at_0);
  for (int k = 1; k <= n; ++k) {
    // on panel j, y(t_k) - y(u) = A_j + s_j (t_k - u) with A_j the chord
    // defect; the s_j parts sum to y_k - y_0, the last panel has A = 0
    double acc = v[k] - v[0];
    for (int j = 0; j + 1 < k; ++j) {
      const int m = k - j;
      const double a = v[k] - v[j + 1] - (v[j + 1] - v[j]) * (m - 1);
      acc += a * lr[m];
    }
    g[k] = -(kEulerGamma + std::log(k * h)) * v[k] + acc;
  }

  // first printed form
  const Eigen::VectorXd cg = left_convolution(interpolant_panels(yy), h, {0.0, false});
  const Eigen::VectorXd cl = left_convolution(interpolant_panels(yy), h, {0.0, true});
  Eigen::VectorXd alt(n + 1);
  alt[0] = y_at_0 == 0.0 ? 0.0 : std::copysign(kInf, y_at_0);
  for (int k = 1; k <= n; ++k)
    alt[k] = -(kEulerGamma + std::log(k * h)) * y_at_0 - (kEulerGamma * cg[k] + cl[k]);
  return {y.with_values(std::move(g)), 0.0, SensitivityMethod::limit_zero,
          y.with_values(std::move(alt))};
}

SensitivityField dalpha_at_one(const GridFunction& y, double y_at_0, double y1_at_0) {
  if (y.n_intervals() < 16) throw GridTooCoarse("second differences need at least 16 intervals");
  const GridFunction yy = with_left_value(y, y_at_0);
  const int n = y.n_intervals();
  const double h = y.spacing();
  const GridFunction yp = derivative(yy);
  const GridFunction ypp = derivative(yp);
  const Eigen::VectorXd conv = left_convolution(interpolant_panels(ypp), h, {0.0, true});

  auto at_origin = [&](double y0, double y1) {
    if (y0 != 0.0) return std::copysign(kInf, -y0);
    if (y1 != 0.0) return std::copysign(kInf, y1);
    return -kEulerGamma * yp[0];
  };
  Eigen::VectorXd g(n + 1);
  g[0] = at_origin(y_at_0, y1_at_0);
  for (int k = 1; k <= n; ++k) {
    const double t = y.node(k);
    g[k] = -y_at_0 / t - y1_at_0 * std::log(t) - kEulerGamma * yp[k] - conv[k];
  }

  std::optional<GridFunction> alt;
  if (y_at_0 == 0.0) {
    // y'' reconstructed panel-wise from y' instead of nodal second differences
    const Eigen::VectorXd conv2 = left_convolution(derivative_panels(yp), h, {0.0, true});
    Eigen::VectorXd r(n + 1);
    r[0] = at_origin(0.0, y1_at_0);
    for (int k = 1; k <= n; ++k)
      r[k] = -y1_at_0 * std::log(y.node(k)) - kEulerGamma * yp[k] - conv2[k];
    alt = y.with_values(std::move(r));
  }
  return {y.with_values(std::move(g)), 1.0, SensitivityMethod::limit_one, std::move(alt)};
}

SensitivityField dalpha_fd(const GridFunction& y, FractionalOrder a, double step) {
  const double lo = a.alpha - step, hi = a.alpha + step;
  if (lo < 0.0 || hi > 1.0) throw OrderOutOfRange("finite-difference stencil leaves [0, 1]");
  const GridFunction dp = rl_left(y, hi), dm = rl_left(y, lo);
  return {(1.0 / (2 * step)) * (dp - dm), a.alpha, SensitivityMethod::finite_difference,
          std::nullopt};
}

SensitivityField order_sensitivity(const GridFunction& y, FractionalOrder a) {
  if (a.alpha == 0.0) return dalpha_at_zero(y, y.front());
  if (a.alpha == 1.0) return dalpha_at_one(y, y.front(), derivative(y)[0]);
  return dalpha_rl(y, a);
}

double expansion_check(double t, double tau, double eps) {
  if (!(tau > 0.0 && tau < t)) throw DomainError("expansion check needs 0 < τ < t");
  if (!(std::abs(eps) <= 0.1)) throw DomainError("expansion check needs |ε| <= 0.1");
  const double l = std::log(t - tau);
  return std::exp(eps * l) * reciprocal_gamma(1.0 + eps) - (1.0 + eps * (kEulerGamma + l));
}

double f1_convolution_at_end(const GridFunction& y, FractionalOrder a) {
  if (a.alpha >= 1.0) throw OrderOutOfRange("f1 convolution needs α < 1");
  const double abel = integrate(y, QuadratureRule::product_abel(a.alpha));
  const double logk = integrate(y, QuadratureRule::product_log(a.alpha));
  // f₁(s) = s^(-α)(ψ(1-α) - ln s)/Γ(1-α) and product_log carries -ln s
  return reciprocal_gamma(1.0 - a.alpha) * (digamma(1.0 - a.alpha) * abel + logk);
}

}  // namespace fracvar
