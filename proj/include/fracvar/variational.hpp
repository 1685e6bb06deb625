#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fracvar/fractional.hpp"
#include "fracvar/grid.hpp"

namespace fracvar {

enum class Endpoint { left, right };

struct BoundaryCondition {
  Endpoint endpoint;
  double value;
};

// L(t, y, d, α) with d standing for ₀D_t^α y, its three partials and the
// boundary conditions of the admissible set. Evaluators must be stateless.
struct LagrangianSpec {
  using Fn = std::function<double(double t, double y, double d, double alpha)>;

  std::string name;
  Fn evaluate;
  Fn partial_y;
  Fn partial_d;
  Fn partial_alpha;
  std::vector<BoundaryCondition> boundary_conditions;
  double alpha_max = 1.0;
};

// Largest deviation of the supplied partials from central differences of
// `evaluate` (step 1e-5) at one point.
double partials_defect(const LagrangianSpec& L, double t, double y, double d, double alpha);

// A path together with its fractional derivative and order sensitivity on a
// grid, plus endpoint models for the action and α-condition integrands when
// their singularities are known.
struct PathSample {
  GridFunction y;
  GridFunction d;
  GridFunction g;
  double alpha;
  EndpointModels action_models;
  EndpointModels condition_models;
};

// Numeric operators throughout.
PathSample sample_path(const GridFunction& y, FractionalOrder alpha);
// Exact derivative and sensitivity; limit forms on the grid at α ∈ {0, 1}.
PathSample sample_path(const AnalyticPath& y, FractionalOrder alpha, int n_intervals);

using PathFamily = std::function<PathSample(double alpha)>;

struct StationarityReport {
  double action_value = 0.0;
  std::optional<GridFunction> el_residual;
  double el_residual_norm = 0.0;
  double alpha_condition_value = 0.0;
  std::optional<double> alpha_star;
  std::vector<std::string> diagnostics;
};

// Throws BoundaryViolation when y misses a boundary condition of L.
void check_boundary(const GridFunction& y, const LagrangianSpec& L);

// ∫_0^b L(t, y, ₀D_t^α y, α) dt.
double action(const PathSample& s, const LagrangianSpec& L);
double action(const GridFunction& y, FractionalOrder alpha, const LagrangianSpec& L);

// (1/Γ(β)) ∫_0^b (b-t)^(β-1) L dt. β = 1 takes exactly the path of action().
double beta_action(const PathSample& s, double beta, const LagrangianSpec& L);
double beta_action(const GridFunction& y, FractionalOrder alpha, double beta,
                   const LagrangianSpec& L);

// ∂L/∂y + ₜD_b^α ∂L/∂d, pointwise.
GridFunction el_residual_y(const PathSample& s, const LagrangianSpec& L);
GridFunction el_residual_y(const GridFunction& y, FractionalOrder alpha, const LagrangianSpec& L);

// ∫_0^b (∂L/∂d · G(y, α) + ∂L/∂α) dt.
double alpha_condition(const PathSample& s, const LagrangianSpec& L);
double alpha_condition(const GridFunction& y, FractionalOrder alpha, const LagrangianSpec& L);

// Total derivative of I[α] along a stationary family, through the
// α-condition integral. Throws StationarityViolation when the family's
// EL residual exceeds 1e-2 of the residual scale.
double dI_dalpha(const PathFamily& family, FractionalOrder alpha, const LagrangianSpec& L);

// ∫ g ₀D_t^α f - ∫ f ₜD_b^α g, requires f(0) = 0 and g(b) = 0.
double int_by_parts_defect(const GridFunction& f, const GridFunction& g, FractionalOrder alpha);

// Action, EL residual and its interior norm, α-condition.
StationarityReport evaluate_stationarity(const PathSample& s, const LagrangianSpec& L);

}  // namespace fracvar
