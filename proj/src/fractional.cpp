#include "fracvar/fractional.hpp"

#include <cmath>
#include <limits>

#include "fracvar/errors.hpp"
#include "fracvar/special_functions.hpp"

namespace fracvar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_below_one(FractionalOrder a, const char* what) {
  if (a.alpha > 1.0) throw OrderOutOfRange(what);
}

GridFunction with_left_value(const GridFunction& y, double y_at_0) {
  if (y.front() == y_at_0) return y;
  Eigen::VectorXd v = y.values();
  v[0] = y_at_0;
  return y.with_values(std::move(v));
}

// 1/Γ(ν + 1 - α) with rounding in ν + 1 - α snapped onto the poles, so
// that the kernel t^(α-1) has an exactly vanishing derivative.
double power_rgamma(double nu, double alpha) {
  const double x = nu + 1.0 - alpha;
  const double r = std::nearbyint(x);
  if (r <= 0.0 && std::abs(x - r) <= 8 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(nu)))
    return 0.0;
  return reciprocal_gamma(x);
}

}  // namespace

FractionalOrder::FractionalOrder(double a, double dmax) : alpha(a), domain_max(dmax) {
  if (!(dmax >= 0.0 && dmax <= 1.0)) throw OrderOutOfRange("order domain must lie within [0, 1]");
  if (!(a >= 0.0 && a <= dmax)) throw OrderOutOfRange("order outside its admissible interval");
}

double PowerPath::value(double t, double b) const {
  const double s = side == PathSide::from_left ? t : b - t;
  return coefficient * std::pow(s, exponent);
}

PowerPath power_law_deriv(const PowerPath& p, FractionalOrder a) {
  if (a.alpha == 0.0) return p;
  const double c =
      p.coefficient * gamma_fn(p.exponent + 1.0) * power_rgamma(p.exponent, a.alpha);
  if (c == 0.0) return PowerPath{0.0, 0.0, p.side};
  const double nu = p.exponent - a.alpha;
  if (nu <= -1.0) throw NotRepresentable("derivative is not an integrable power");
  return PowerPath{c, nu, p.side};
}

GridFunction rl_left(const GridFunction& y, FractionalOrder a) { return rl_left(y, a, y.front()); }

GridFunction rl_left(const GridFunction& y, FractionalOrder a, double y_at_0) {
  require_below_one(a, "RL derivative needs α <= 1");
  if (a.alpha == 0.0) return y;
  if (a.alpha == 1.0) return derivative(y);
  const GridFunction yy = with_left_value(y, y_at_0);
  const double rg = reciprocal_gamma(1.0 - a.alpha);
  Eigen::VectorXd d =
      rg * left_convolution(derivative_panels(yy), y.spacing(), {-a.alpha, false});
  for (int k = 1; k <= y.n_intervals(); ++k) d[k] += y_at_0 * rg * std::pow(y.node(k), -a.alpha);
  d[0] = y_at_0 == 0.0 ? 0.0 : std::copysign(kInf, y_at_0);
  return y.with_values(std::move(d));
}

GridFunction rl_right(const GridFunction& y, FractionalOrder a) { return rl_right(y, a, y.back()); }

GridFunction rl_right(const GridFunction& y, FractionalOrder a, double y_at_b) {
  require_below_one(a, "RL derivative needs α <= 1");
  if (a.alpha == 1.0) return -1.0 * derivative(y);
  return reversed(rl_left(reversed(y), a, y_at_b));
}

GridFunction caputo_left(const GridFunction& y, FractionalOrder a) {
  require_below_one(a, "Caputo derivative needs α <= 1");
  if (a.alpha == 1.0) return derivative(y);
  const double rg = reciprocal_gamma(1.0 - a.alpha);
  return y.with_values(rg * left_convolution(derivative_panels(y), y.spacing(), {-a.alpha, false}));
}

GridFunction caputo_right(const GridFunction& y, FractionalOrder a) {
  require_below_one(a, "Caputo derivative needs α <= 1");
  if (a.alpha == 1.0) return -1.0 * derivative(y);
  return reversed(caputo_left(reversed(y), a));
}

GridFunction rl_integral(const GridFunction& y, FractionalOrder a) {
  if (!(a.alpha > 0.0)) throw OrderOutOfRange("RL integral needs α in (0, 1]");
  if (!y.left_finite() || !y.right_finite())
    throw SingularEndpointError("RL integral of a path with singular endpoint samples");
  const double rg = reciprocal_gamma(a.alpha);
  return y.with_values(rg * left_convolution(interpolant_panels(y), y.spacing(), {a.alpha - 1.0, false}));
}

GridFunction gl_check(const GridFunction& y, FractionalOrder a) {
  if (!(a.alpha > 0.0 && a.alpha < 1.0)) throw OrderOutOfRange("GL check needs α in (0, 1)");
  const int n = y.n_intervals();
  Eigen::VectorXd w(n + 1);
  w[0] = 1.0;
  for (int j = 1; j <= n; ++j) w[j] = w[j - 1] * (1.0 - (a.alpha + 1.0) / j);
  const auto& v = y.values();
  const double scale = std::pow(y.spacing(), -a.alpha);
  Eigen::VectorXd d(n + 1);
  for (int k = 0; k <= n; ++k) {
    double acc = 0.0;
    for (int j = 0; j <= k; ++j) acc += w[j] * v[k - j];
    d[k] = scale * acc;
  }
  return y.with_values(std::move(d));
}

AnalyticPath::AnalyticPath(double domain_end, std::vector<PowerPath> terms)
    : b_(domain_end), terms_(std::move(terms)) {
  if (!(b_ > 0.0)) throw DomainError("domain end must be positive");
  for (const auto& p : terms_)
    if (!(p.exponent > -1.0)) throw DomainError("power path exponent must exceed -1");
}

double AnalyticPath::value(double t) const {
  double s = 0.0;
  for (const auto& p : terms_) s += p.value(t, b_);
  return s;
}

double AnalyticPath::derivative(double t) const {
  double s = 0.0;
  for (const auto& p : terms_) {
    if (p.exponent == 0.0 || p.coefficient == 0.0) continue;
    if (p.side == PathSide::from_left)
      s += p.coefficient * p.exponent * std::pow(t, p.exponent - 1.0);
    else
      s -= p.coefficient * p.exponent * std::pow(b_ - t, p.exponent - 1.0);
  }
  return s;
}

double AnalyticPath::boundary_value() const {
  double B = 0.0;
  for (const auto& p : terms_) {
    if (p.side == PathSide::from_left && p.exponent == 0.0) B += p.coefficient;
    if (p.side == PathSide::from_right) B += p.coefficient * std::pow(b_, p.exponent);
  }
  return B;
}

// Caputo part of the left derivative of C (b-t)^ν:
// -νC b^(ν-1) t^(1-α) / Γ(2-α) · 2F1(1-ν, 1; 2-α; t/b)
double AnalyticPath::caputo_right_term(const PowerPath& p, double t, double alpha) const {
  const double nu = p.exponent;
  if (nu == 0.0 || p.coefficient == 0.0 || t == 0.0) return 0.0;
  const double pre = -nu * p.coefficient * std::pow(b_, nu - 1.0);
  if (t >= b_) {
    if (nu - alpha <= 0.0) return kNaN;
    // Gauss summation at z = 1
    return pre * std::pow(b_, 1.0 - alpha) * gamma_fn(nu - alpha) *
           power_rgamma(nu, alpha) * reciprocal_gamma(1.0 - alpha);
  }
  return pre * std::pow(t, 1.0 - alpha) * reciprocal_gamma(2.0 - alpha) *
         hypergeometric_2f1(1.0 - nu, 1.0, 2.0 - alpha, t / b_);
}

double AnalyticPath::rl_left(double t, double alpha) const {
  if (alpha == 0.0) return value(t);
  if (alpha == 1.0) return derivative(t);
  double s = 0.0;
  const double B = boundary_value();
  if (B != 0.0) s += B * reciprocal_gamma(1.0 - alpha) * std::pow(t, -alpha);
  for (const auto& p : terms_) {
    if (p.exponent == 0.0 && p.side == PathSide::from_left) continue;
    if (p.side == PathSide::from_left) {
      const double c =
          p.coefficient * gamma_fn(p.exponent + 1.0) * power_rgamma(p.exponent, alpha);
      if (c != 0.0) s += c * std::pow(t, p.exponent - alpha);
    } else {
      s += caputo_right_term(p, t, alpha);
    }
  }
  return s;
}

double AnalyticPath::rl_left_dalpha(double t, double alpha) const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw OrderOutOfRange("α-derivative needs α in (0, 1)");
  double s = 0.0;
  const double lt = std::log(t);
  const double B = boundary_value();
  if (B != 0.0)
    s += B * std::pow(t, -alpha) *
         (-reciprocal_gamma_derivative(1.0 - alpha) - reciprocal_gamma(1.0 - alpha) * lt);
  for (const auto& p : terms_) {
    if (p.exponent == 0.0 && p.side == PathSide::from_left) continue;
    if (p.side == PathSide::from_left) {
      const double q = p.exponent + 1.0 - alpha;
      if (t == 0.0 && p.exponent - alpha > 0.0) continue;
      s += p.coefficient * gamma_fn(p.exponent + 1.0) * std::pow(t, p.exponent - alpha) *
           (-reciprocal_gamma_derivative(q) - reciprocal_gamma(q) * lt);
    } else {
      if (t == 0.0) continue;
      // smooth in α: fourth-order central stencil
      constexpr double d = 1e-3;
      const double f2p = caputo_right_term(p, t, alpha + 2 * d);
      const double f1p = caputo_right_term(p, t, alpha + d);
      const double f1m = caputo_right_term(p, t, alpha - d);
      const double f2m = caputo_right_term(p, t, alpha - 2 * d);
      s += (-f2p + 8 * f1p - 8 * f1m + f2m) / (12 * d);
    }
  }
  return s;
}

AnalyticPath AnalyticPath::mirrored() const {
  std::vector<PowerPath> m = terms_;
  for (auto& p : m)
    p.side = p.side == PathSide::from_left ? PathSide::from_right : PathSide::from_left;
  return AnalyticPath(b_, std::move(m));
}

double AnalyticPath::rl_right(double t, double alpha) const {
  return mirrored().rl_left(b_ - t, alpha);
}

namespace {

GridFunction sample_fn(double b, int n, const std::function<double(double)>& f) {
  return GridFunction::sample(b, n, f);
}

}  // namespace

GridFunction AnalyticPath::sample(int n) const {
  return sample_fn(b_, n, [this](double t) { return value(t); });
}

GridFunction AnalyticPath::sample_rl_left(int n, double alpha) const {
  return sample_fn(b_, n, [this, alpha](double t) { return rl_left(t, alpha); });
}

GridFunction AnalyticPath::sample_rl_left_dalpha(int n, double alpha) const {
  return sample_fn(b_, n, [this, alpha](double t) { return rl_left_dalpha(t, alpha); });
}

GridFunction AnalyticPath::sample_rl_right(int n, double alpha) const {
  const AnalyticPath m = mirrored();
  return sample_fn(b_, n, [&m, this, alpha](double t) { return m.rl_left(b_ - t, alpha); });
}

}  // namespace fracvar
