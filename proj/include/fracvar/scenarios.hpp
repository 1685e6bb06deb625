#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracvar/variational.hpp"

namespace fracvar {

enum class ExampleId {
  ex1_inertial,
  ex1_regularized,
  ex2_constant_force,
  ex3_primary_constraint,
  ex4a_quadratic,
  ex4b_log,
  beta_remark,
};

const char* to_string(ExampleId id);
// Accepts the full names and the short forms ex1, ex1r, ex2, ex3, ex4a, ex4b, beta.
std::optional<ExampleId> parse_example_id(const std::string& s);

struct ExampleParameters {
  double c = 1.0;
  double d = 1.0;
  std::optional<double> alpha0;  // per-scenario default when absent
  std::vector<double> beta = {0.75, 1.0, 1.5};
  int n_intervals = 1024;
  std::vector<double> alpha_grid;  // per-scenario default when empty
};

enum class ClaimStatus { pass, fail, contested };
const char* to_string(ClaimStatus s);

// A checked statement: what is asserted, what was measured, and the verdict.
struct Claim {
  std::string assertion;
  std::string measured;
  ClaimStatus status;
};

struct ExampleReport {
  ExampleId id;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<Claim> claims;
  StationarityReport report;
};

// Lagrangians of the scenarios.
LagrangianSpec inertial_lagrangian();                           // D²
LagrangianSpec regularized_lagrangian(double alpha0);           // D² + (α-α₀)²
LagrangianSpec constant_force_lagrangian(double c);             // D²/2 - c y
LagrangianSpec primary_constraint_lagrangian(double c);         // Γ(1-α) D - c y²/2
LagrangianSpec quadratic_potential_lagrangian(double c, double d);  // c D + d y²/2
LagrangianSpec log_potential_lagrangian(double c);              // c D + ln|y|

// Stationary families with the endpoint models of their integrands.
PathSample primary_constraint_path(double c, double alpha, int n_intervals);
PathSample constant_force_path(double c, double alpha, int n_intervals);
PathSample log_potential_path(double c, double alpha, int n_intervals);

// Reduced α-condition of the quadratic-potential case,
// [ψ(1-α)(1-2α) + 1] / ((1-2α)² Γ(1-α)²); +inf for α >= 1/2.
double quadratic_condition_closed(double alpha);
// The same integral by product quadrature on n intervals.
double quadratic_condition_quadrature(double alpha, int n_intervals);

// Throws ValidityRegionError for parameters outside a scenario's region.
ExampleReport run_example(ExampleId id, const ExampleParameters& params);

}  // namespace fracvar
