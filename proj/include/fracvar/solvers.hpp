#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fracvar/fractional.hpp"
#include "fracvar/grid.hpp"
#include "fracvar/variational.hpp"

namespace fracvar {

// y = ₀I_t^α g, the solution of ₀D_t^α y = g with y(0) = 0; α in (0, 1).
GridFunction solve_rl_equation(const GridFunction& g, FractionalOrder alpha);

// c/Γ(1+α) Σ_p (-α)_p/Γ(1+p+α) t^(p+α), the solution of
// ₀D_t^α y = c (1-t)^α/Γ(1+α). Coefficients follow the ratio rule
// a_{p+1} = a_p (p-α)/(1+p+α); no Γ at negative arguments.
struct SeriesSolution {
  double prefactor = 0.0;
  std::vector<double> exponents;
  std::vector<double> coefficients;
  int truncation_P = 0;
  double truncation_error_estimate = 0.0;
  double value = 0.0;
};

// Stops once the next term is below tol·|partial sum| or at P = max_terms.
// Throws NoConvergence when the cap is hit at t = 1.
SeriesSolution example2_series(double c, FractionalOrder alpha, double t, double tol = 1e-14,
                               int max_terms = 200);

struct RootResult {
  double alpha_star = 0.0;
  double condition_value = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

// Scans 1000 interior points of (lo, hi) for the first sign change, then
// bisects to |Δα| <= tol. Throws NoBracket without a sign change.
RootResult find_alpha_root(const std::function<double(double)>& condition, double lo, double hi,
                           double tol = 1e-12);

struct AlphaScanRow {
  double alpha = 0.0;
  double action = 0.0;
  double alpha_condition = 0.0;
  double el_residual_norm = 0.0;
  std::string note;
};

struct AlphaScanTable {
  std::vector<AlphaScanRow> rows;
  int argmin = -1;
  int argmax = -1;

  bool strictly_increasing() const;
};

// I[α] along the family, with its α-condition and EL residual. Rows whose
// action diverges carry +inf.
AlphaScanTable alpha_scan(const PathFamily& family, const LagrangianSpec& L,
                          const std::vector<double>& alpha_grid);

// Evaluates a trial function (y, ₀D_t^α y, G) at an order.
using TrialFunction = std::function<PathSample(double alpha)>;

TrialFunction grid_trial(GridFunction y);
TrialFunction analytic_trial(AnalyticPath y, int n_intervals);

// y = offset + Σ a_k basis_k, a_k in bounds[k].
struct RitzProblem {
  TrialFunction offset;
  std::vector<TrialFunction> basis;
  std::vector<std::pair<double, double>> bounds;
  std::vector<double> alpha_grid;  // empty: 41 points on [0, α₀]
  int refinements = 2;
  int max_sweeps = 200;
  // endpoint models of the action integrand, when known
  std::function<EndpointModels(double alpha)> action_models;
};

struct RitzResult {
  std::vector<double> coefficients;
  double alpha = 0.0;
  StationarityReport report;
  bool iteration_limit = false;
  int sweeps = 0;
  int action_evaluations = 0;
};

// Linear combination of trial samples at one order; zero weights are skipped.
PathSample combine(const PathSample& offset, const std::vector<PathSample>& basis,
                   const std::vector<double>& coefficients);

// Coordinate descent (golden section per coefficient) nested in a grid
// search over α with local refinements. Deterministic. Never returns a worse
// action than the corners of the coefficient box at the evaluated orders.
RitzResult joint_minimize(const RitzProblem& problem, const LagrangianSpec& L);

}  // namespace fracvar
