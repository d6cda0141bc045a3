#pragma once

#include <initializer_list>

namespace coslab {

/// Guard distance around excluded parameter lattices and numerator poles.
inline constexpr double kPoleEps = 1e-8;

/// log|Gamma(x)| together with the sign of Gamma(x).
struct SignedLogGamma {
  double log_abs;
  int sign;
};

/// Throws GammaPole when x is within kPoleEps of a non-positive integer.
SignedLogGamma signed_lgamma(double x);

/// Gamma(x) as a signed value; uses the reflection formula for x < 0.
double gamma_fn(double x);

/// 1/Gamma(x), which is entire: exactly zero at the non-positive integers.
double rgamma(double x);

/// prod Gamma(num_i) / prod Gamma(den_i), evaluated as exp of log-gamma
/// differences with explicit sign tracking. A denominator sitting exactly on a
/// pole makes the ratio zero; a numerator pole throws GammaPole.
double gamma_ratio(std::initializer_list<double> num, std::initializer_list<double> den);

/// True when x is within eps of a non-positive integer.
bool near_gamma_pole(double x, double eps = kPoleEps);

}  // namespace coslab
