#include "fracvar/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fracvar/errors.hpp"
#include "fracvar/special_functions.hpp"

namespace fracvar {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

GridFunction solve_rl_equation(const GridFunction& g, FractionalOrder a) {
  if (!(a.alpha > 0.0 && a.alpha < 1.0)) throw OrderOutOfRange("solver needs α in (0, 1)");
  return rl_integral(g, a);
}

SeriesSolution example2_series(double c, FractionalOrder a, double t, double tol, int max_terms) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("series is evaluated on [0, 1]");
  if (!(a.alpha > 0.0 && a.alpha < 1.0)) throw OrderOutOfRange("series needs α in (0, 1)");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const double al = a.alpha;
  SeriesSolution s;
  s.prefactor = c * reciprocal_gamma(1.0 + al);
  double coef = reciprocal_gamma(1.0 + al);
  double tp = std::pow(t, al);
  double sum = 0.0;
  double next = 0.0;
  bool converged = false;
  for (int p = 0; p <= max_terms; ++p) {
    s.exponents.push_back(p + al);
    s.coefficients.push_back(coef);
    sum += coef * tp;
    s.truncation_P = p;
    const double ncoef = coef * (p - al) / (1.0 + p + al);
    next = ncoef * tp * t;
    if (std::abs(next) < tol * std::abs(sum) || next == 0.0) {
      converged = true;
      break;
    }
    coef = ncoef;
    tp *= t;
  }
  if (!converged && t == 1.0)
    throw NoConvergence("series did not reach the tolerance at t = 1 within " +
                        std::to_string(max_terms) + " terms");
  // from p = 1 on every term has the sign of the first tail term and the
  // ratio stays below t; at t near 1 the terms decay like p^(-1-2α)
  const double P = s.truncation_P + 1;
  const double geometric = t < 1.0 ? 1.0 / (1.0 - t) : kInf;
  const double algebraic = (P + al) / (2 * al) + 1.0;
  s.truncation_error_estimate = std::abs(s.prefactor * next) * std::min(geometric, algebraic);
  s.value = s.prefactor * sum;
  return s;
}

RootResult find_alpha_root(const std::function<double(double)>& f, double lo, double hi,
                           double tol) {
  if (!(hi > lo)) throw DomainError("empty bracket");
  constexpr int kScan = 1000;
  double a = 0.0, b = 0.0, fa = 0.0, fb = 0.0;
  bool found = false;
  double prev_x = lo + (hi - lo) / (kScan + 1);
  double prev_f = f(prev_x);
  if (prev_f == 0.0) return {prev_x, 0.0, prev_x, prev_x};
  for (int i = 2; i <= kScan && !found; ++i) {
    const double x = lo + (hi - lo) * i / (kScan + 1);
    const double fx = f(x);
    if (fx == 0.0) return {x, 0.0, x, x};
    if (std::isfinite(prev_f) && std::isfinite(fx) && std::signbit(fx) != std::signbit(prev_f)) {
      a = prev_x, fa = prev_f, b = x, fb = fx;
      found = true;
    }
    prev_x = x, prev_f = fx;
  }
  if (!found) throw NoBracket("no sign change on a 1000-point scan");
  while (b - a > tol) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = f(m);
    if (fm == 0.0) return {m, 0.0, m, m};
    if (std::signbit(fm) == std::signbit(fa))
      a = m, fa = fm;
    else
      b = m, fb = fm;
  }
  return std::abs(fa) <= std::abs(fb) ? RootResult{a, fa, a, b} : RootResult{b, fb, a, b};
}

bool AlphaScanTable::strictly_increasing() const {
  for (size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i].action > rows[i - 1].action)) return false;
  return !rows.empty();
}

AlphaScanTable alpha_scan(const PathFamily& family, const LagrangianSpec& L,
                          const std::vector<double>& grid) {
  AlphaScanTable table;
  for (double a : grid) {
    AlphaScanRow row;
    row.alpha = a;
    try {
      const PathSample s = family(a);
      const StationarityReport r = evaluate_stationarity(s, L);
      row.action = r.action_value;
      row.alpha_condition = r.alpha_condition_value;
      row.el_residual_norm = r.el_residual_norm;
      for (const auto& d : r.diagnostics) row.note += (row.note.empty() ? "" : "; ") + d;
    } catch (const NonIntegrableError& e) {
      row.action = kInf;
      row.alpha_condition = row.el_residual_norm = std::numeric_limits<double>::quiet_NaN();
      row.note = e.what();
    }
    table.rows.push_back(std::move(row));
  }
  for (int i = 0; i < static_cast<int>(table.rows.size()); ++i) {
    const double v = table.rows[i].action;
    if (std::isnan(v)) continue;
    if (table.argmin < 0 || v < table.rows[table.argmin].action) table.argmin = i;
    if (table.argmax < 0 || v > table.rows[table.argmax].action) table.argmax = i;
  }
  return table;
}

TrialFunction grid_trial(GridFunction y) {
  return [y = std::move(y)](double a) { return sample_path(y, a); };
}

TrialFunction analytic_trial(AnalyticPath y, int n) {
  return [y = std::move(y), n](double a) { return sample_path(y, a, n); };
}

PathSample combine(const PathSample& offset, const std::vector<PathSample>& basis,
                   const std::vector<double>& c) {
  Eigen::VectorXd y = offset.y.values(), d = offset.d.values(), g = offset.g.values();
  for (size_t k = 0; k < basis.size(); ++k) {
    if (c[k] == 0.0) continue;
    y += c[k] * basis[k].y.values();
    d += c[k] * basis[k].d.values();
    g += c[k] * basis[k].g.values();
  }
  return PathSample{offset.y.with_values(std::move(y)), offset.y.with_values(std::move(d)),
                    offset.y.with_values(std::move(g)), offset.alpha, offset.action_models,
                    offset.condition_models};
}

namespace {

struct InnerResult {
  std::vector<double> coef;
  double value = kInf;
  int sweeps = 0;
  bool limit = false;
};

class RitzObjective {
public:
  RitzObjective(const RitzProblem& p, const LagrangianSpec& L, double alpha)
      : problem_(p), L_(L), offset_(p.offset(alpha)) {
    for (const auto& b : p.basis) basis_.push_back(b(alpha));
    if (p.action_models) offset_.action_models = p.action_models(alpha);
  }

  double operator()(const std::vector<double>& c) {
    ++evaluations;
    try {
      const double v = action(combine(offset_, basis_, c), L_);
      return std::isfinite(v) ? v : kInf;
    } catch (const NumericError&) {
      // non-integrable or uncharacterisable integrand: not a candidate
      return kInf;
    }
  }

  PathSample sample(const std::vector<double>& c) const { return combine(offset_, basis_, c); }

  int evaluations = 0;

private:
  const RitzProblem& problem_;
  const LagrangianSpec& L_;
  PathSample offset_;
  std::vector<PathSample> basis_;
};

double golden_section(const std::function<double(double)>& f, double lo, double hi, double& fbest) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  const double tol = 1e-10 * std::max(1.0, hi - lo);
  double a = lo, b = hi;
  double x1 = b - r * (b - a), x2 = a + r * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2, x2 = x1, f2 = f1;
      x1 = b - r * (b - a);
      f1 = f(x1);
    } else {
      a = x1, x1 = x2, f1 = f2;
      x2 = a + r * (b - a);
      f2 = f(x2);
    }
  }
  if (f1 <= f2) {
    fbest = f1;
    return x1;
  }
  fbest = f2;
  return x2;
}

InnerResult minimize_coefficients(RitzObjective& obj, const RitzProblem& p,
                                  std::vector<double> start) {
  const size_t k = p.basis.size();
  InnerResult best;
  // corners of the coefficient box
  if (k <= 10) {
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      std::vector<double> c(k);
      for (size_t i = 0; i < k; ++i) c[i] = (mask >> i) & 1u ? p.bounds[i].second : p.bounds[i].first;
      const double v = obj(c);
      if (v < best.value) best.value = v, best.coef = c;
    }
  }
  for (size_t i = 0; i < k; ++i) start[i] = std::clamp(start[i], p.bounds[i].first, p.bounds[i].second);
  const double v0 = obj(start);
  if (v0 <= best.value || best.coef.empty()) best.value = v0, best.coef = start;

  std::vector<double> c = best.coef;
  double fc = best.value;
  bool converged = false;
  int sweep = 0;
  while (sweep < p.max_sweeps) {
    ++sweep;
    const double before = fc;
    for (size_t i = 0; i < k; ++i) {
      double fx = kInf;
      auto line = [&](double x) {
        std::vector<double> t = c;
        t[i] = x;
        return obj(t);
      };
      const double x = golden_section(line, p.bounds[i].first, p.bounds[i].second, fx);
      if (fx < fc) c[i] = x, fc = fx;
    }
    if (!(before - fc > 1e-13 * (1.0 + std::abs(fc)))) {
      converged = true;
      break;
    }
  }
  if (fc <= best.value) best.value = fc, best.coef = c;
  best.sweeps = sweep;
  best.limit = !converged;
  return best;
}

}  // namespace

RitzResult joint_minimize(const RitzProblem& p, const LagrangianSpec& L) {
  if (p.basis.empty()) throw DomainError("Ritz basis is empty");
  if (p.bounds.size() != p.basis.size()) throw DomainError("one coefficient interval per basis element");
  for (const auto& [lo, hi] : p.bounds)
    if (!(std::isfinite(lo) && std::isfinite(hi) && lo <= hi))
      throw DomainError("coefficient bounds must be finite");

  const double amax = L.alpha_max;
  std::vector<double> grid = p.alpha_grid;
  if (grid.empty())
    for (int i = 0; i <= 40; ++i) grid.push_back(amax * i / 40.0);

  RitzResult out;
  double best_value = kInf;
  std::vector<double> warm(p.basis.size(), 0.0);
  for (size_t i = 0; i < warm.size(); ++i) warm[i] = std::clamp(0.0, p.bounds[i].first, p.bounds[i].second);

  auto visit = [&](double a) {
    RitzObjective obj(p, L, a);
    const InnerResult r = minimize_coefficients(obj, p, warm);
    out.action_evaluations += obj.evaluations;
    out.sweeps = std::max(out.sweeps, r.sweeps);
    out.iteration_limit = out.iteration_limit || r.limit;
    if (std::isfinite(r.value)) warm = r.coef;
    if (r.value < best_value) {
      best_value = r.value;
      out.alpha = a;
      out.coefficients = r.coef;
    }
  };
  for (double a : grid) visit(a);
  if (!std::isfinite(best_value)) throw NonIntegrableError("action diverges on the whole α grid");

  double spacing = grid.size() > 1 ? (grid.back() - grid.front()) / (grid.size() - 1) : 0.0;
  for (int r = 0; r < p.refinements && spacing > 0.0; ++r) {
    const double centre = out.alpha;
    warm = out.coefficients;
    for (int j = -5; j <= 5; ++j) {
      const double a = centre + spacing * j / 5.0;
      if (j == 0 || a < 0.0 || a > amax) continue;
      visit(a);
    }
    spacing /= 5.0;
  }

  RitzObjective obj(p, L, out.alpha);
  out.report = evaluate_stationarity(obj.sample(out.coefficients), L);
  out.report.alpha_star = out.alpha;
  if (out.iteration_limit)
    out.report.diagnostics.push_back("coordinate descent hit the sweep limit (" +
                                     std::to_string(p.max_sweeps) + ")");
  return out;
}

}  // namespace fracvar
