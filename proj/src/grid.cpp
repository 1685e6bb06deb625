#include "fracvar/grid.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "fracvar/errors.hpp"

namespace fracvar {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_same_grid(const GridFunction& a, const GridFunction& b) {
  if (!a.same_grid(b)) throw DomainError("grid functions live on different grids");
}

}  // namespace

GridFunction::GridFunction(double domain_end, Eigen::VectorXd values)
    : domain_end_(domain_end), values_(std::move(values)) {
  if (!(domain_end_ > 0.0) || !std::isfinite(domain_end_))
    throw DomainError("domain end must be positive and finite");
  if (values_.size() < 3) throw GridTooCoarse("a grid function needs at least 2 intervals");
  for (Eigen::Index i = 1; i + 1 < values_.size(); ++i)
    if (!std::isfinite(values_[i]))
      throw DomainError("non-finite interior sample at node " + std::to_string(i));
}

GridFunction GridFunction::sample(double domain_end, int n_intervals,
                                  const std::function<double(double)>& f) {
  if (n_intervals < 2) throw GridTooCoarse("a grid function needs at least 2 intervals");
  Eigen::VectorXd v(n_intervals + 1);
  const double h = domain_end / n_intervals;
  for (int i = 0; i < n_intervals; ++i) v[i] = f(i * h);
  v[n_intervals] = f(domain_end);
  return GridFunction(domain_end, std::move(v));
}

GridFunction GridFunction::constant(double domain_end, int n_intervals, double value) {
  return GridFunction(domain_end, Eigen::VectorXd::Constant(n_intervals + 1, value));
}

Eigen::VectorXd GridFunction::nodes() const {
  Eigen::VectorXd t(values_.size());
  for (Eigen::Index i = 0; i < t.size(); ++i) t[i] = node(static_cast<int>(i));
  t[t.size() - 1] = domain_end_;
  return t;
}

bool GridFunction::left_finite() const { return std::isfinite(values_[0]); }
bool GridFunction::right_finite() const { return std::isfinite(values_[values_.size() - 1]); }

GridFunction GridFunction::with_values(Eigen::VectorXd values) const {
  if (values.size() != values_.size()) throw DomainError("sample count mismatch");
  return GridFunction(domain_end_, std::move(values));
}

bool GridFunction::same_grid(const GridFunction& other) const {
  return domain_end_ == other.domain_end_ && values_.size() == other.values_.size();
}

GridFunction operator+(const GridFunction& a, const GridFunction& b) {
  require_same_grid(a, b);
  return a.with_values(a.values() + b.values());
}

GridFunction operator-(const GridFunction& a, const GridFunction& b) {
  require_same_grid(a, b);
  return a.with_values(a.values() - b.values());
}

GridFunction operator*(double s, const GridFunction& a) { return a.with_values(s * a.values()); }

GridFunction reversed(const GridFunction& f) { return f.with_values(f.values().reverse()); }

double sup_norm(const GridFunction& f, double t_lo, double t_hi) {
  const double h = f.spacing();
  double m = 0.0;
  const int n = f.n_intervals();
  for (int i = 0; i <= n; ++i) {
    const double t = f.node(i);
    // nodes are compared with a relative slack so that 0.1 hits node 0.1
    if (t < t_lo - 1e-9 * h || t > t_hi + 1e-9 * h) continue;
    if (std::isfinite(f[i])) m = std::max(m, std::abs(f[i]));
  }
  return m;
}

double interior_sup_norm(const GridFunction& f, double fraction) {
  const int n = f.n_intervals();
  const int skip = static_cast<int>(std::ceil(fraction * (n + 1)));
  double m = 0.0;
  for (int i = skip; i <= n - skip; ++i)
    if (std::isfinite(f[i])) m = std::max(m, std::abs(f[i]));
  return m;
}

GridFunction derivative(const GridFunction& y) {
  const int n = y.n_intervals();
  if (n < 4) throw GridTooCoarse("derivative needs at least 4 intervals");
  const double h = y.spacing();
  const auto& v = y.values();
  Eigen::VectorXd d(n + 1);
  for (int i = 1; i < n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (2 * h);
  d[0] = (-3 * v[0] + 4 * v[1] - v[2]) / (2 * h);
  d[n] = (3 * v[n] - 4 * v[n - 1] + v[n - 2]) / (2 * h);
  // one-sided stencils through a singular endpoint are meaningless
  if (!y.left_finite()) d[0] = kNaN;
  if (!y.right_finite()) {
    d[n] = kNaN;
    d[n - 1] = (3 * v[n - 1] - 4 * v[n - 2] + v[n - 3]) / (2 * h);
  }
  if (!y.left_finite()) d[1] = (-3 * v[1] + 4 * v[2] - v[3]) / (2 * h);
  return y.with_values(std::move(d));
}

double kernel_moment(PowerLogKernel k, double lo, double hi) {
  const double q = k.power + 1.0;
  if (!(hi > lo) || lo < 0.0) throw DomainError("kernel moment needs 0 <= lo < hi");
  if (lo == 0.0) {
    if (q <= 0.0) throw NonIntegrableError("kernel not integrable at 0");
    const double hq = std::pow(hi, q);
    return k.log ? hq * (std::log(hi) / q - 1.0 / (q * q)) : hq / q;
  }
  const double lr = std::log1p((hi - lo) / lo);  // ln(hi/lo)
  if (!k.log) {
    if (q == 0.0) return lr;
    return std::pow(lo, q) * std::expm1(q * lr) / q;
  }
  if (q == 0.0) return 0.5 * lr * (std::log(hi) + std::log(lo));
  // F(s) = s^q (ln s / q - 1/q²), differenced without cancellation
  const double lq = std::pow(lo, q);
  const double dq = lq * std::expm1(q * lr);  // hi^q - lo^q
  const double dlog = dq * std::log(hi) + lq * lr;  // hi^q ln hi - lo^q ln lo
  return dlog / q - dq / (q * q);
}

PanelLinear interpolant_panels(const GridFunction& y) {
  const int n = y.n_intervals();
  const double h = y.spacing();
  const auto& v = y.values();
  PanelLinear p{Eigen::VectorXd(n), Eigen::VectorXd(n)};
  for (int j = 0; j < n; ++j) {
    p.mean[j] = 0.5 * (v[j] + v[j + 1]);
    p.slope[j] = (v[j + 1] - v[j]) / h;
  }
  return p;
}

PanelLinear derivative_panels(const GridFunction& y) {
  const int n = y.n_intervals();
  if (n < 4) throw GridTooCoarse("derivative reconstruction needs at least 4 intervals");
  if (!y.left_finite()) throw SingularEndpointError("left endpoint sample is not finite");
  const double h = y.spacing();
  const auto& v = y.values();
  Eigen::VectorXd s(n);
  for (int j = 0; j < n; ++j) s[j] = (v[j + 1] - v[j]) / h;
  // panels with finite chord slopes
  const int m = y.right_finite() ? n : n - 1;
  Eigen::VectorXd kappa = Eigen::VectorXd::Zero(n);
  for (int j = 1; j + 1 < m; ++j) kappa[j] = (s[j + 1] - s[j - 1]) / (2 * h);
  kappa[0] = (s[1] - s[0]) / h;
  kappa[m - 1] = (s[m - 1] - s[m - 2]) / h;
  if (m < n) kappa[n - 1] = kNaN;
  return PanelLinear{std::move(s), std::move(kappa)};
}

namespace {

// W0[m] = ∫ K(s) ds and Wc[m] = ∫ (σ_m - s) K(s) ds over [(m-1)h, mh],
// σ_m = (m - 1/2)h being the distance from t_k to the centre of panel k-m.
void panel_weights(int n, double h, PowerLogKernel k, Eigen::VectorXd& w0, Eigen::VectorXd& wc) {
  w0.resize(n + 1);
  wc.resize(n + 1);
  w0[0] = wc[0] = 0.0;
  const PowerLogKernel k1{k.power + 1.0, k.log};
  for (int m = 1; m <= n; ++m) {
    const double lo = (m - 1) * h, hi = m * h;
    w0[m] = kernel_moment(k, lo, hi);
    wc[m] = (m - 0.5) * h * w0[m] - kernel_moment(k1, lo, hi);
  }
}

}  // namespace

Eigen::VectorXd left_convolution(const PanelLinear& data, double h, PowerLogKernel kernel) {
  const int n = static_cast<int>(data.mean.size());
  Eigen::VectorXd w0, wc;
  panel_weights(n, h, kernel, w0, wc);
  Eigen::VectorXd out(n + 1);
  out[0] = 0.0;
  for (int k = 1; k <= n; ++k) {
    double acc = 0.0;
    for (int m = 1; m <= k; ++m) acc += data.mean[k - m] * w0[m] + data.slope[k - m] * wc[m];
    out[k] = acc;
  }
  return out;
}

double left_convolution_last(const PanelLinear& data, double h, PowerLogKernel kernel) {
  const int n = static_cast<int>(data.mean.size());
  Eigen::VectorXd w0, wc;
  panel_weights(n, h, kernel, w0, wc);
  double acc = 0.0;
  for (int m = 1; m <= n; ++m) acc += data.mean[n - m] * w0[m] + data.slope[n - m] * wc[m];
  return acc;
}

QuadratureRule QuadratureRule::product_abel(double exponent) {
  if (!(exponent >= 0.0 && exponent < 1.0))
    throw OrderOutOfRange("product_abel exponent must lie in [0, 1)");
  return QuadratureRule(Kind::product_abel, exponent);
}

QuadratureRule QuadratureRule::product_log(double exponent) {
  if (!(exponent >= 0.0 && exponent < 1.0))
    throw OrderOutOfRange("product_log exponent must lie in [0, 1)");
  return QuadratureRule(Kind::product_log, exponent);
}

double integrate(const GridFunction& y, const QuadratureRule& rule) {
  const int n = y.n_intervals();
  const double h = y.spacing();
  if (rule.kind() == QuadratureRule::Kind::trapezoid) {
    if (!y.left_finite() || !y.right_finite())
      throw SingularEndpointError("trapezoid rule cannot absorb a singular endpoint");
    const auto& v = y.values();
    return h * (v.sum() - 0.5 * (v[0] + v[n]));
  }
  if (!y.left_finite())
    throw SingularEndpointError("product rules absorb the kernel singularity at t=b only");
  Eigen::VectorXd v = y.values();
  // the smooth factor may be recorded singular at b because of the kernel;
  // the kernel integrates it away, extrapolate the factor
  if (!y.right_finite()) v[n] = 2 * v[n - 1] - v[n - 2];
  // distances from b run the other way: reverse so b sits at the origin
  const GridFunction r = y.with_values(v.reverse());
  const PanelLinear p = interpolant_panels(r);
  // ∫_0^b r(s) K(s) ds with r given on panels [(m-1)h, mh]
  double acc = 0.0;
  const PowerLogKernel k{-rule.exponent(), rule.kind() == QuadratureRule::Kind::product_log};
  for (int m = 1; m <= n; ++m) {
    const double lo = (m - 1) * h, hi = m * h, c = (m - 0.5) * h;
    const double m0 = kernel_moment(k, lo, hi);
    const double m1 = kernel_moment({k.power + 1.0, k.log}, lo, hi);
    acc += p.mean[m - 1] * m0 + p.slope[m - 1] * (m1 - c * m0);
  }
  return rule.kind() == QuadratureRule::Kind::product_log ? -acc : acc;
}

GridFunction abel_convolution(const GridFunction& y, double alpha, Side side) {
  if (!(alpha >= 0.0 && alpha < 1.0)) throw OrderOutOfRange("abel convolution needs α in [0, 1)");
  if (!y.left_finite() || !y.right_finite())
    throw SingularEndpointError("abel convolution needs finite samples");
  const GridFunction src = side == Side::left ? y : reversed(y);
  const Eigen::VectorXd out = left_convolution(interpolant_panels(src), y.spacing(), {-alpha, false});
  const GridFunction res = y.with_values(out);
  return side == Side::left ? res : reversed(res);
}

namespace {

// ∫_0^L s^(-e) (ln s)^q ds
double model_moment(double e, bool log, double length) {
  return kernel_moment({-e, log}, 0.0, length);
}

// Integral over one half interval, samples v[0..m] ordered outward from the
// endpoint at distance s = i*h.
double half_integral(const Eigen::VectorXd& v, double h, std::optional<EndpointModel> model) {
  const int m = static_cast<int>(v.size()) - 1;
  const bool finite0 = std::isfinite(v[0]);
  auto trapezoid = [&](const Eigen::VectorXd& r) { return h * (r.sum() - 0.5 * (r[0] + r[m])); };

  if (!model) {
    if (finite0) return trapezoid(v);
    if (m < 4) throw GridTooCoarse("too few samples to characterise a singular endpoint");
    const double ratio = (v[1] - v[2]) / (v[2] - v[4]);
    if (!(ratio > 0.0) || !std::isfinite(ratio))
      throw SingularEndpointError("cannot characterise the endpoint singularity");
    const double e = std::log2(ratio);
    if (e >= 1.0) throw NonIntegrableError("endpoint singularity of order " + std::to_string(e));
    if (e <= 0.0) {
      Eigen::VectorXd r = v;
      r[0] = 2 * v[1] - v[2];
      return trapezoid(r);
    }
    model = EndpointModel{e, false};
  }
  const double e = model->exponent;

  // basis of the local model; the constant always comes last. Powers too
  // close to each other or to s^0 are dropped: the bounded remainder absorbs
  // them and the fit stays well conditioned.
  std::vector<std::function<double(double)>> basis;
  std::vector<double> moments;
  std::vector<double> used;
  const double len = m * h;
  auto add_power = [&](double p) {
    if (p >= 1.0) throw NonIntegrableError("endpoint singularity of order " + std::to_string(p));
    if (std::abs(p) < 1e-9) return;
    for (double u : used)
      if (std::abs(u - p) < 1e-3) return;
    if (!used.empty() && std::abs(p) < 1e-3) return;
    used.push_back(p);
    basis.push_back([p](double s) { return std::pow(s, -p); });
    moments.push_back(model_moment(p, false, len));
  };
  add_power(e);
  if (model->log) {
    basis.push_back([e](double s) { return std::pow(s, -e) * std::log(s); });
    moments.push_back(model_moment(e, true, len));
  }
  for (double p : model->extra_exponents) add_power(p);
  if (basis.empty()) {
    Eigen::VectorXd r = v;
    if (!finite0) r[0] = 2 * v[1] - v[2];
    return trapezoid(r);
  }
  const int k = static_cast<int>(basis.size()) + 1;
  if (m < k + 1) throw GridTooCoarse("too few samples to fit the endpoint model");
  Eigen::MatrixXd a(k, k);
  Eigen::VectorXd rhs(k);
  for (int i = 0; i < k; ++i) {
    const double s = (i + 1) * h;
    for (int j = 0; j + 1 < k; ++j) a(i, j) = basis[j](s);
    a(i, k - 1) = 1.0;
    rhs[i] = v[i + 1];
  }
  const Eigen::VectorXd coef = a.fullPivLu().solve(rhs);
  // remainder f - singular part is bounded, with limit B at the endpoint
  Eigen::VectorXd r(m + 1);
  r[0] = coef[k - 1];
  for (int i = 1; i <= m; ++i) {
    r[i] = v[i];
    for (int j = 0; j + 1 < k; ++j) r[i] -= coef[j] * basis[j](i * h);
  }
  double exact = 0.0;
  for (int j = 0; j + 1 < k; ++j) exact += coef[j] * moments[j];
  return exact + trapezoid(r);
}

}  // namespace

double integrate_singular(const GridFunction& f, const EndpointModels& models) {
  const int n = f.n_intervals();
  const double h = f.spacing();
  const auto& v = f.values();
  const bool plain_left = f.left_finite() && !models.left;
  const bool plain_right = f.right_finite() && !models.right;
  if (plain_left && plain_right) return h * (v.sum() - 0.5 * (v[0] + v[n]));
  const int mid = n / 2;
  const Eigen::VectorXd left = v.head(mid + 1);
  const Eigen::VectorXd right = v.tail(n - mid + 1).reverse();
  return half_integral(left, h, models.left) + half_integral(right, h, models.right);
}

}  // namespace fracvar
