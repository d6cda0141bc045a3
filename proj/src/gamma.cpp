#include "coslab/gamma.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "coslab/errors.hpp"

namespace coslab {
namespace {

// Reentrant lgamma: std::lgamma writes the global signgam on glibc.
double lgamma_positive(double x) {
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

// sin(pi x) with the argument reduced exactly before multiplying by pi.
double sin_pi(double x) {
  const double k = std::nearbyint(x);
  const double r = x - k;
  const double s = std::sin(std::numbers::pi * r);
  return std::fmod(k, 2.0) == 0.0 ? s : -s;
}

}  // namespace

bool near_gamma_pole(double x, double eps) {
  if (x > eps) return false;
  return std::abs(x - std::nearbyint(x)) <= eps;
}

SignedLogGamma signed_lgamma(double x) {
  if (!std::isfinite(x)) throw GammaPole("gamma argument is not finite");
  if (near_gamma_pole(x)) {
    std::ostringstream msg;
    msg << "gamma pole at argument " << x;
    throw GammaPole(msg.str());
  }
  if (x > 0.0) return {lgamma_positive(x), 1};
  // Gamma(x) = pi / (sin(pi x) Gamma(1 - x)), with 1 - x > 1.
  const double s = sin_pi(x);
  return {std::log(std::numbers::pi) - std::log(std::abs(s)) - lgamma_positive(1.0 - x),
          s > 0.0 ? 1 : -1};
}

double gamma_fn(double x) {
  const auto g = signed_lgamma(x);
  return g.sign * std::exp(g.log_abs);
}

double rgamma(double x) {
  if (x <= 0.0 && x == std::nearbyint(x)) return 0.0;
  if (x > 0.0) return std::exp(-lgamma_positive(x));
  // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
  return sin_pi(x) * std::exp(lgamma_positive(1.0 - x)) / std::numbers::pi;
}

double gamma_ratio(std::initializer_list<double> num, std::initializer_list<double> den) {
  // Numerator and denominator logs are summed separately so that ratios of
  // identical argument sets cancel to exactly 1.
  double log_num = 0.0;
  double log_den = 0.0;
  int sign = 1;
  for (double x : num) {
    const auto g = signed_lgamma(x);
    log_num += g.log_abs;
    sign *= g.sign;
  }
  for (double x : den) {
    if (x <= 0.0 && x == std::nearbyint(x)) return 0.0;
    if (!std::isfinite(x)) throw GammaPole("gamma argument is not finite");
    if (x > 0.0) {
      log_den += lgamma_positive(x);
    } else {
      const double s = sin_pi(x);
      log_den += std::log(std::numbers::pi) - std::log(std::abs(s)) - lgamma_positive(1.0 - x);
      sign *= s > 0.0 ? 1 : -1;
    }
  }
  return sign * std::exp(log_num - log_den);
}

}  // namespace coslab
