#include "fracvar/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "fracvar/errors.hpp"

namespace fracvar {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::nearbyint(x); }

// B_{2k} / (2k) for k = 1..7
constexpr std::array<double, 7> kBernoulliOver2k = {
    1.0 / 12.0,     -1.0 / 120.0,          1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0,    -691.0 / 32760.0,      1.0 / 12.0,
};

// π cot(π x), reduced so that large |x| does not lose the fractional part.
double pi_cot_pi(double x) {
  const double frac = x - std::nearbyint(x);
  return kPi * std::cos(kPi * frac) / std::sin(kPi * frac);
}

struct DigammaParts {
  double value;
  double magnitude;  // sum of |terms|, used for the rounding bound
  double truncation;
};

DigammaParts digamma_positive(double x) {
  double shift = 0.0;
  double magnitude = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    magnitude += 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double power = inv2;
  for (double coeff : kBernoulliOver2k) {
    series += coeff * power;
    power *= inv2;
  }
  // next term of the series: B16/16 x^-16
  const double truncation = (3617.0 / 8160.0) * power;
  const double value = std::log(x) - 0.5 * inv - series + shift;
  magnitude += std::abs(std::log(x)) + 0.5 * inv + std::abs(series);
  return {value, magnitude, truncation};
}

}  // namespace

double gamma_fn(double x) {
  if (std::isnan(x)) return x;
  if (is_nonpositive_integer(x))
    throw PoleError("gamma_fn: pole at x = " + std::to_string(x));
  const double value = std::tgamma(x);
  if (!std::isfinite(value))
    throw OverflowError("gamma_fn: result not representable at x = " + std::to_string(x));
  return value;
}

double log_gamma(double x) {
  if (is_nonpositive_integer(x))
    throw PoleError("log_gamma: pole at x = " + std::to_string(x));
  return std::lgamma(x);
}

double reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 171.0) return 0.0;
  if (x < -170.0) {
    // reflection: 1/Γ(x) = Γ(1-x) sin(πx)/π, tiny magnitude
    return 0.0;
  }
  return 1.0 / std::tgamma(x);
}

double reciprocal_gamma_derivative(double x) {
  if (is_nonpositive_integer(x)) {
    const double m = -x;
    const double sign = std::fmod(m, 2.0) == 0.0 ? 1.0 : -1.0;
    return sign * std::tgamma(m + 1.0);
  }
  return -digamma(x) * reciprocal_gamma(x);
}

SpecialFnResult digamma_with_bound(double x) {
  if (std::isnan(x)) return {x, 0.0};
  if (is_nonpositive_integer(x))
    throw PoleError("digamma: pole at x = " + std::to_string(x));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (x > 0.0) {
    const auto parts = digamma_positive(x);
    return {parts.value, 4.0 * eps * parts.magnitude + parts.truncation};
  }
  // ψ(x) = ψ(1 - x) - π cot(πx)
  const auto parts = digamma_positive(1.0 - x);
  const double cot_term = pi_cot_pi(x);
  return {parts.value - cot_term,
          4.0 * eps * (parts.magnitude + std::abs(cot_term)) + parts.truncation};
}

double digamma(double x) { return digamma_with_bound(x).value; }

namespace {

double series_2f1(double a, double b, double c, double z) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 100000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
    if (term == 0.0 || std::abs(term) < 1e-17 * std::abs(sum)) return sum;
  }
  throw NoConvergence("hypergeometric_2f1: series did not converge");
}

double connection_2f1(double a, double b, double c, double z) {
  const double w = 1.0 - z;
  const double s = c - a - b;
  const double first = gamma_fn(c) * gamma_fn(s) * reciprocal_gamma(c - a) *
                       reciprocal_gamma(c - b);
  const double second = gamma_fn(c) * gamma_fn(-s) * reciprocal_gamma(a) * reciprocal_gamma(b);
  double value = 0.0;
  if (first != 0.0) value += first * series_2f1(a, b, 1.0 - s, w);
  if (second != 0.0) value += second * std::pow(w, s) * series_2f1(c - a, c - b, 1.0 + s, w);
  return value;
}

// c = a + b + m with integer m: the logarithmic connection formula.
double integer_case_2f1(double a, double b, int m, double z) {
  const double w = 1.0 - z;
  if (m < 0) return std::pow(w, m) * integer_case_2f1(b + m, a + m, -m, z);
  const double c = a + b + m;
  double finite = 0.0;
  if (m > 0) {
    double term = 1.0;
    for (int n = 0; n < m; ++n) {
      finite += term;
      if (n + 1 < m) term *= (a + n) * (b + n) / ((n + 1.0) * (1.0 - m + n)) * w;
    }
    finite *= gamma_fn(m) * gamma_fn(c) * reciprocal_gamma(a + m) * reciprocal_gamma(b + m);
  }
  const double scale = reciprocal_gamma(a) * reciprocal_gamma(b);
  if (scale == 0.0) return finite;
  // ψ(n+1) + ψ(n+m+1) - ψ(a+n+m) - ψ(b+n+m), advanced by recurrence
  double psi = digamma(1.0) + digamma(m + 1.0) - digamma(a + m) - digamma(b + m);
  double coef = 1.0;
  for (int k = 1; k <= m; ++k) coef /= k;  // 1/m!
  const double lw = std::log(w);
  double sum = 0.0;
  for (int n = 0; n < 100000; ++n) {
    const double term = coef * (lw - psi);
    sum += term;
    if (n > 2 && std::abs(term) < 1e-17 * std::abs(sum)) break;
    psi += 1.0 / (n + 1.0) + 1.0 / (n + m + 1.0) - 1.0 / (a + n + m) - 1.0 / (b + n + m);
    coef *= (a + m + n) * (b + m + n) / ((n + 1.0) * (n + m + 1.0)) * w;
  }
  return finite - std::pow(-w, m) * gamma_fn(c) * scale * sum;
}

}  // namespace

double hypergeometric_2f1(double a, double b, double c, double z) {
  if (!(z >= 0.0 && z < 1.0))
    throw DomainError("hypergeometric_2f1: z must lie in [0, 1)");
  if (is_nonpositive_integer(c)) throw PoleError("hypergeometric_2f1: c is a pole");
  // terminating series
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b) || z <= 0.5)
    return series_2f1(a, b, c, z);
  const double s = c - a - b;
  const double m = std::nearbyint(s);
  // The connection formula cancels like eps/|s - m| near an integer, so close
  // to one we interpolate quadratically in c through the exact integer case.
  constexpr double kHalfWidth = 2e-4;
  if (std::abs(s - m) < kHalfWidth) {
    const double c0 = a + b + m;
    const double f0 = integer_case_2f1(a, b, static_cast<int>(m), z);
    if (s == m) return f0;
    const double fp = connection_2f1(a, b, c0 + kHalfWidth, z);
    const double fm = connection_2f1(a, b, c0 - kHalfWidth, z);
    const double u = (s - m) / kHalfWidth;
    return f0 + 0.5 * u * (fp - fm) + 0.5 * u * u * (fp - 2 * f0 + fm);
  }
  return connection_2f1(a, b, c, z);
}

}  // namespace fracvar
