#include "fracvar/variational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fracvar/errors.hpp"
#include "fracvar/sensitivity.hpp"
#include "fracvar/special_functions.hpp"

namespace fracvar {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Pointwise evaluation of one of L's functions along the sample.
Eigen::VectorXd along(const PathSample& s, const LagrangianSpec::Fn& fn) {
  const int n = s.y.n_intervals();
  Eigen::VectorXd out(n + 1);
  for (int i = 0; i <= n; ++i) out[i] = fn(s.y.node(i), s.y[i], s.d[i], s.alpha);
  out[n] = fn(s.y.domain_end(), s.y[n], s.d[n], s.alpha);
  return out;
}

// An endpoint value is kept only when it is finite; anything else marks the
// endpoint as a recorded singularity.
void flag_endpoints(Eigen::VectorXd& v) {
  const Eigen::Index n = v.size() - 1;
  if (!std::isfinite(v[0])) v[0] = kNaN;
  if (!std::isfinite(v[n])) v[n] = kNaN;
}

double weighted_action(const PathSample& s, const LagrangianSpec& L, double beta) {
  check_boundary(s.y, L);
  Eigen::VectorXd f = along(s, L.evaluate);
  EndpointModels models = s.action_models;
  if (beta != 1.0) {
    if (!(beta > 0.0)) throw DomainError("β must be positive");
    const int n = s.y.n_intervals();
    const bool right_finite = std::isfinite(f[n]);
    const double rg = reciprocal_gamma(beta);
    for (int i = 0; i <= n; ++i)
      f[i] *= rg * std::pow(s.y.domain_end() - s.y.node(i), beta - 1.0);
    f[n] = kNaN;  // weight is 0 or ∞ there
    if (models.right)
      models.right->exponent += 1.0 - beta;
    else if (right_finite)
      models.right = EndpointModel{1.0 - beta, false};
  }
  flag_endpoints(f);
  return integrate_singular(s.y.with_values(std::move(f)), models);
}

}  // namespace

double partials_defect(const LagrangianSpec& L, double t, double y, double d, double a) {
  constexpr double h = 1e-5;
  const auto& f = L.evaluate;
  const double dy = (f(t, y + h, d, a) - f(t, y - h, d, a)) / (2 * h);
  const double dd = (f(t, y, d + h, a) - f(t, y, d - h, a)) / (2 * h);
  const double da = (f(t, y, d, a + h) - f(t, y, d, a - h)) / (2 * h);
  return std::max({std::abs(dy - L.partial_y(t, y, d, a)), std::abs(dd - L.partial_d(t, y, d, a)),
                   std::abs(da - L.partial_alpha(t, y, d, a))});
}

PathSample sample_path(const GridFunction& y, FractionalOrder a) {
  return PathSample{y, rl_left(y, a), order_sensitivity(y, a).field, a.alpha, {}, {}};
}

PathSample sample_path(const AnalyticPath& p, FractionalOrder a, int n) {
  GridFunction y = p.sample(n);
  if (a.alpha == 0.0 || a.alpha == 1.0) {
    GridFunction g = order_sensitivity(y, a).field;
    return PathSample{y, p.sample_rl_left(n, a.alpha), std::move(g), a.alpha, {}, {}};
  }
  return PathSample{y, p.sample_rl_left(n, a.alpha), p.sample_rl_left_dalpha(n, a.alpha),
                    a.alpha, {}, {}};
}

void check_boundary(const GridFunction& y, const LagrangianSpec& L) {
  for (const auto& bc : L.boundary_conditions) {
    const double v = bc.endpoint == Endpoint::left ? y.front() : y.back();
    if (!(std::abs(v - bc.value) <= 1e-8 * std::max(1.0, std::abs(bc.value))))
      throw BoundaryViolation("path misses the boundary value " + std::to_string(bc.value) +
                              (bc.endpoint == Endpoint::left ? " at t=0" : " at t=b"));
  }
}

double action(const PathSample& s, const LagrangianSpec& L) { return weighted_action(s, L, 1.0); }

double action(const GridFunction& y, FractionalOrder a, const LagrangianSpec& L) {
  return action(sample_path(y, a), L);
}

double beta_action(const PathSample& s, double beta, const LagrangianSpec& L) {
  return weighted_action(s, L, beta);
}

double beta_action(const GridFunction& y, FractionalOrder a, double beta, const LagrangianSpec& L) {
  return beta_action(sample_path(y, a), beta, L);
}

GridFunction el_residual_y(const PathSample& s, const LagrangianSpec& L) {
  Eigen::VectorXd p = along(s, L.partial_d);
  Eigen::VectorXd q = along(s, L.partial_y);
  flag_endpoints(p);
  flag_endpoints(q);
  // ₜD_b^α p only sees p on [t, b]; a singular p(0) only spoils node 0
  const GridFunction pg = s.y.with_values(p);
  const GridFunction right = rl_right(pg, s.alpha);
  Eigen::VectorXd r = q + right.values();
  flag_endpoints(r);
  return s.y.with_values(std::move(r));
}

GridFunction el_residual_y(const GridFunction& y, FractionalOrder a, const LagrangianSpec& L) {
  return el_residual_y(sample_path(y, a), L);
}

double alpha_condition(const PathSample& s, const LagrangianSpec& L) {
  const Eigen::VectorXd p = along(s, L.partial_d);
  const Eigen::VectorXd pa = along(s, L.partial_alpha);
  Eigen::VectorXd f(p.size());
  for (Eigen::Index i = 0; i < f.size(); ++i)
    f[i] = (p[i] == 0.0 ? 0.0 : p[i] * s.g[i]) + pa[i];
  flag_endpoints(f);
  return integrate_singular(s.y.with_values(std::move(f)), s.condition_models);
}

double alpha_condition(const GridFunction& y, FractionalOrder a, const LagrangianSpec& L) {
  return alpha_condition(sample_path(y, a), L);
}

namespace {

double residual_scale(const PathSample& s, const LagrangianSpec& L) {
  Eigen::VectorXd q = along(s, L.partial_y);
  flag_endpoints(q);
  return std::max(1.0, interior_sup_norm(s.y.with_values(std::move(q))));
}

}  // namespace

double dI_dalpha(const PathFamily& family, FractionalOrder a, const LagrangianSpec& L) {
  const PathSample s = family(a.alpha);
  const double norm = interior_sup_norm(el_residual_y(s, L));
  if (norm > 1e-2 * residual_scale(s, L))
    throw StationarityViolation("family is not stationary at α = " + std::to_string(a.alpha) +
                                " (EL residual " + std::to_string(norm) + ")");
  return alpha_condition(s, L);
}

double int_by_parts_defect(const GridFunction& f, const GridFunction& g, FractionalOrder a) {
  if (!f.same_grid(g)) throw DomainError("f and g live on different grids");
  const double sf = std::max(1.0, f.values().cwiseAbs().maxCoeff());
  const double sg = std::max(1.0, g.values().cwiseAbs().maxCoeff());
  if (std::abs(f.front()) > 1e-12 * sf) throw BoundaryViolation("f(0) must vanish");
  if (std::abs(g.back()) > 1e-12 * sg) throw BoundaryViolation("g(b) must vanish");
  const GridFunction lhs = g.with_values(g.values().cwiseProduct(rl_left(f, a).values()));
  const GridFunction rhs = f.with_values(f.values().cwiseProduct(rl_right(g, a).values()));
  return integrate_singular(lhs) - integrate_singular(rhs);
}

StationarityReport evaluate_stationarity(const PathSample& s, const LagrangianSpec& L) {
  StationarityReport r;
  r.action_value = action(s, L);
  try {
    r.el_residual = el_residual_y(s, L);
    r.el_residual_norm = interior_sup_norm(*r.el_residual);
  } catch (const NumericError& e) {
    r.el_residual_norm = kNaN;
    r.diagnostics.push_back(std::string("EL residual not computable: ") + e.what());
  }
  try {
    r.alpha_condition_value = alpha_condition(s, L);
  } catch (const NumericError& e) {
    r.alpha_condition_value = kNaN;
    r.diagnostics.push_back(std::string("α-condition not computable: ") + e.what());
  }
  return r;
}

}  // namespace fracvar
