#pragma once

#include <optional>

#include "fracvar/fractional.hpp"
#include "fracvar/grid.hpp"

namespace fracvar {

enum class SensitivityMethod { kernel_formula, limit_zero, limit_one, finite_difference };

const char* to_string(SensitivityMethod m);

// G(y, α) = ∂(₀D_t^α y)/∂α on a grid. `alternate` holds a second evaluation
// where one exists (the other printed form at α = 0, the reduced Caputo form
// at α = 1).
struct SensitivityField {
  GridFunction field;
  double alpha;
  SensitivityMethod method;
  std::optional<GridFunction> alternate;
};

// f₁(t, α) = (ψ(1-α) - ln t) / (t^α Γ(1-α)), t > 0, α in [0, 1).
double f1_kernel(double t, FractionalOrder alpha);

// ψ(1-α) ₀D_t^α y - (1/Γ(1-α)) [y(0) ln t / t^α + ∫_0^t y'(τ) ln(t-τ) (t-τ)^(-α) dτ],
// with the same derivative reconstruction as rl_left; α in (0, 1).
SensitivityField dalpha_rl(const GridFunction& y, FractionalOrder alpha);
SensitivityField dalpha_rl(const GridFunction& y, FractionalOrder alpha, double y_at_0);

// α = 0⁺ limit: -(γ + ln t) y(t) + ∫_0^t (y(t) - y(u))/(t - u) du.
// The alternate is -(γ + ln t) y(0) - ∫_0^t (γ + ln τ) y(t-τ) dτ, kept for
// reference only; the two do not agree in general.
SensitivityField dalpha_at_zero(const GridFunction& y, double y_at_0);

// α = 1⁻ limit: -y(0)/t - y'(0) ln t - γ y'(t) - ∫_0^t y''(τ) ln(t-τ) dτ.
// When y(0) = 0 the reduced (Caputo) form is evaluated independently as the
// alternate. Throws GridTooCoarse below 16 intervals.
SensitivityField dalpha_at_one(const GridFunction& y, double y_at_0, double y1_at_0);

// Central α-difference of rl_left.
SensitivityField dalpha_fd(const GridFunction& y, FractionalOrder alpha, double step = 1e-4);

// Dispatch on α: limit forms at 0 and 1, kernel formula inside.
SensitivityField order_sensitivity(const GridFunction& y, FractionalOrder alpha);

// (t-τ)^ε/Γ(1+ε) - [1 + ε(γ + ln(t-τ))]; 0 < τ < t, |ε| <= 0.1.
double expansion_check(double t, double tau, double eps);

// (f₁ * y)(b) = ∫_0^b f₁(b - τ, α) y(τ) dτ by product rules, α in [0, 1).
double f1_convolution_at_end(const GridFunction& y, FractionalOrder alpha);

}  // namespace fracvar
