#pragma once

#include <Eigen/Core>
#include <functional>
#include <optional>
#include <vector>

namespace fracvar {

// Uniform samples t_i = i*b/n, i = 0..n, of a real function on [0, b].
// Interior samples are always finite. An endpoint sample may be non-finite,
// which records an (integrable) singularity there; such samples are excluded
// from norms and never summed directly by the quadratures.
class GridFunction {
public:
  GridFunction(double domain_end, Eigen::VectorXd values);

  static GridFunction sample(double domain_end, int n_intervals,
                             const std::function<double(double)>& f);
  static GridFunction constant(double domain_end, int n_intervals, double value);

  double domain_end() const { return domain_end_; }
  int n_intervals() const { return static_cast<int>(values_.size()) - 1; }
  double spacing() const { return domain_end_ / n_intervals(); }
  double node(int i) const { return i * spacing(); }
  Eigen::VectorXd nodes() const;

  const Eigen::VectorXd& values() const { return values_; }
  double operator[](int i) const { return values_[i]; }
  double front() const { return values_[0]; }
  double back() const { return values_[values_.size() - 1]; }

  bool left_finite() const;
  bool right_finite() const;

  // Same grid, new samples.
  GridFunction with_values(Eigen::VectorXd values) const;
  bool same_grid(const GridFunction& other) const;

private:
  double domain_end_;
  Eigen::VectorXd values_;
};

GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(double s, const GridFunction& a);

// t -> f(b - t)
GridFunction reversed(const GridFunction& f);

// Largest |f(t_i)| over nodes with t_lo <= t_i <= t_hi and finite samples.
double sup_norm(const GridFunction& f, double t_lo, double t_hi);
// Sup over nodes excluding `fraction` of the nodes at each end.
double interior_sup_norm(const GridFunction& f, double fraction = 0.05);

// Second-order central differences inside, second-order one-sided at the ends.
GridFunction derivative(const GridFunction& y);

// Kernel s^power * (ln s)^(log ? 1 : 0) on s > 0.
struct PowerLogKernel {
  double power = 0.0;
  bool log = false;
};

// ∫_lo^hi kernel(s) ds for 0 <= lo < hi (lo > 0 required when power <= -1).
double kernel_moment(PowerLogKernel kernel, double lo, double hi);

// Piecewise-linear data on the panels [t_j, t_j+1]:
// f(τ) = mean[j] + slope[j] * (τ - midpoint_j).
struct PanelLinear {
  Eigen::VectorXd mean;
  Eigen::VectorXd slope;
};

// Linear interpolant of y on each panel.
PanelLinear interpolant_panels(const GridFunction& y);
// Derivative of y reconstructed panel by panel: the mean on each panel is the
// exact chord slope, the slope is a centred second-difference estimate. Exact
// for quadratics. A non-finite right endpoint poisons only the last panel.
PanelLinear derivative_panels(const GridFunction& y);

// result[k] = ∫_0^{t_k} f(τ) K(t_k - τ) dτ for every node, f given panel-wise.
// Each panel is integrated exactly against the kernel.
Eigen::VectorXd left_convolution(const PanelLinear& data, double spacing, PowerLogKernel kernel);
// The same quantity at the last node only, O(n).
double left_convolution_last(const PanelLinear& data, double spacing, PowerLogKernel kernel);

class QuadratureRule {
public:
  enum class Kind { trapezoid, product_abel, product_log };

  static QuadratureRule trapezoid() { return QuadratureRule(Kind::trapezoid, 0.0); }
  // ∫_0^b y(τ) (b - τ)^(-exponent) dτ
  static QuadratureRule product_abel(double exponent);
  // ∫_0^b y(τ) (-ln(b - τ)) (b - τ)^(-exponent) dτ
  static QuadratureRule product_log(double exponent = 0.0);

  Kind kind() const { return kind_; }
  double exponent() const { return exponent_; }

private:
  QuadratureRule(Kind kind, double exponent) : kind_(kind), exponent_(exponent) {}
  Kind kind_;
  double exponent_;
};

double integrate(const GridFunction& y, const QuadratureRule& rule = QuadratureRule::trapezoid());

enum class Side { left, right };

// t -> ∫_0^t y(τ)(t-τ)^(-α) dτ (left) or ∫_t^b y(τ)(τ-t)^(-α) dτ (right),
// product-trapezoidal.
GridFunction abel_convolution(const GridFunction& y, double alpha, Side side);

// Local model of an integrable endpoint singularity: the integrand behaves
// like s^(-exponent) * (A + C ln s) + Σ A_k s^(-extra_k) + B, s being the
// distance to the endpoint.
struct EndpointModel {
  double exponent = 0.0;
  bool log = false;
  std::vector<double> extra_exponents = {};
};

struct EndpointModels {
  std::optional<EndpointModel> left;
  std::optional<EndpointModel> right;
};

// ∫_0^b f dt for integrands with algebraic(-log) endpoint singularities.
// Each half of the interval has its endpoint model fitted to the nearest
// samples, integrated exactly, and the bounded remainder integrated by the
// trapezoidal rule. Non-finite endpoints without a model get an exponent
// estimated from the samples at distance h, 2h and 4h.
// Throws NonIntegrableError when an exponent is >= 1.
double integrate_singular(const GridFunction& f, const EndpointModels& models = {});

}  // namespace fracvar
