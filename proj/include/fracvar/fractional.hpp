#pragma once

#include <vector>

#include "fracvar/grid.hpp"

namespace fracvar {

// An order α in the admissible interval [0, α₀], α₀ <= 1.
struct FractionalOrder {
  double alpha;
  double domain_max;

  FractionalOrder(double alpha, double domain_max = 1.0);  // NOLINT: implicit from double
};

enum class PathSide { from_left, from_right };

// C t^ν (from_left) or C (b - t)^ν (from_right), ν > -1.
struct PowerPath {
  double coefficient = 1.0;
  double exponent = 0.0;
  PathSide side = PathSide::from_left;

  double value(double t, double b) const;
};

// Exact left derivative of a from_left path (or right derivative of a
// from_right path), C Γ(ν+1)/Γ(ν+1-α) t^(ν-α). The zero path when
// 1/Γ(ν+1-α) vanishes. Throws NotRepresentable when the result exponent is
// <= -1 and nonzero.
PowerPath power_law_deriv(const PowerPath& p, FractionalOrder alpha);

// Left RL derivative via the Caputo form plus the boundary term
// y(0)/(Γ(1-α) t^α). α = 0 is the identity, α = 1 the classical derivative.
// The t = 0 sample is ±inf when y(0) != 0.
GridFunction rl_left(const GridFunction& y, FractionalOrder alpha);
GridFunction rl_left(const GridFunction& y, FractionalOrder alpha, double y_at_0);
// Right RL derivative, mirror of rl_left; α = 1 gives -y'.
GridFunction rl_right(const GridFunction& y, FractionalOrder alpha);
GridFunction rl_right(const GridFunction& y, FractionalOrder alpha, double y_at_b);

GridFunction caputo_left(const GridFunction& y, FractionalOrder alpha);
GridFunction caputo_right(const GridFunction& y, FractionalOrder alpha);

// Left RL integral (1/Γ(α)) ∫_0^t (t-τ)^(α-1) y(τ) dτ, α in (0, 1].
GridFunction rl_integral(const GridFunction& y, FractionalOrder alpha);

// Grünwald-Letnikov approximation of the left RL derivative, cross-check only.
GridFunction gl_check(const GridFunction& y, FractionalOrder alpha);

// Finite sum of power paths on [0, b] with exact left/right RL derivatives
// and exact α-derivatives of the left derivative.
class AnalyticPath {
public:
  AnalyticPath(double domain_end, std::vector<PowerPath> terms);

  double domain_end() const { return b_; }
  const std::vector<PowerPath>& terms() const { return terms_; }

  double value(double t) const;
  double derivative(double t) const;
  // ₀D_t^α y, α in [0, 1]
  double rl_left(double t, double alpha) const;
  // ∂/∂α ₀D_t^α y, α in (0, 1)
  double rl_left_dalpha(double t, double alpha) const;
  // ₜD_b^α y
  double rl_right(double t, double alpha) const;

  // t -> y(b - t), swapping the sides of every term
  AnalyticPath mirrored() const;

  GridFunction sample(int n_intervals) const;
  GridFunction sample_rl_left(int n_intervals, double alpha) const;
  GridFunction sample_rl_left_dalpha(int n_intervals, double alpha) const;
  GridFunction sample_rl_right(int n_intervals, double alpha) const;

private:
  double boundary_value() const;
  double caputo_right_term(const PowerPath& p, double t, double alpha) const;

  double b_;
  std::vector<PowerPath> terms_;
};

}  // namespace fracvar
