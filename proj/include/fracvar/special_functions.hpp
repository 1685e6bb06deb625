#pragma once

namespace fracvar {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

struct SpecialFnResult {
  double value = 0.0;
  double abs_error_bound = 0.0;
};

// Euler gamma function. Throws PoleError at 0, -1, -2, ... and OverflowError
// when |Γ(x)| is not representable.
double gamma_fn(double x);

// ln|Γ(x)|.
double log_gamma(double x);

// 1/Γ(x), which is entire: returns exactly 0 at the poles of Γ.
double reciprocal_gamma(double x);

// d/dx 1/Γ(x) = -ψ(x)/Γ(x), continued through the poles of Γ where it equals
// (-1)^m m! at x = -m.
double reciprocal_gamma_derivative(double x);

// Digamma ψ(x) = d/dx ln Γ(x). Upward recurrence to x >= 6, then the
// asymptotic series through the B14 term; reflection for x <= 0.
double digamma(double x);
SpecialFnResult digamma_with_bound(double x);

// Gauss hypergeometric 2F1(a, b; c; z) for real parameters and 0 <= z < 1.
// Uses the power series for z <= 1/2 and the 1 - z connection formula above.
double hypergeometric_2f1(double a, double b, double c, double z);

}  // namespace fracvar
