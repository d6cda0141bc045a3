#include "coslab/zonal.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "coslab/errors.hpp"

namespace coslab {

std::vector<double> zonal_basis(int n, int J, double t) {
  if (n < 2) throw std::invalid_argument("dimension n must be >= 2");
  const double e = 0.5 * (n - 3);
  const auto rec = jacobi_recurrence(std::max(J, 1), e, e);
  std::vector<double> z(static_cast<std::size_t>(J) + 1);
  z[0] = 1.0;
  if (J >= 1) z[1] = t / rec.offdiag[0];
  for (int j = 1; j < J; ++j) {
    z[j + 1] = (t * z[j] - rec.offdiag[j - 1] * z[j - 1]) / rec.offdiag[j];
  }
  return z;
}

double ZonalFunction::operator()(double t) const {
  const auto z = zonal_basis(n, degree(), t);
  double s = 0.0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) s += coeffs[j] * z[j];
  return s;
}

ZonalFunction zonal_analyze(int n, const QuadratureRule& rule, std::span<const double> samples, int J) {
  if (J < 0) throw std::invalid_argument("max degree must be >= 0");
  if (samples.size() != rule.size()) throw std::invalid_argument("one sample per rule node expected");
  if (rule.size() < static_cast<std::size_t>(J) + 1) {
    std::ostringstream msg;
    msg << "a " << rule.size() << "-node rule cannot resolve degree " << J << " (need " << J + 1 << ")";
    throw InsufficientRule(msg.str());
  }
  ZonalFunction f{n, std::vector<double>(static_cast<std::size_t>(J) + 1, 0.0)};
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const auto z = zonal_basis(n, J, rule.nodes[k]);
    const double wf = rule.weights[k] * samples[k];
    for (int j = 0; j <= J; ++j) f.coeffs[j] += wf * z[j];
  }
  return f;
}

ZonalFunction zonal_project(int n, const std::function<double(double)>& profile, int J, int extra_nodes) {
  const auto rule = gauss_jacobi_rule(n, J + 1 + extra_nodes);
  std::vector<double> samples(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k) samples[k] = profile(rule.nodes[k]);
  return zonal_analyze(n, rule, samples, J);
}

std::vector<double> zonal_synth(const ZonalFunction& f, std::span<const double> t) {
  std::vector<double> out(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) out[k] = f(t[k]);
  return out;
}

ZonalFunction zonal_apply(const ZonalFunction& f, const SpectralOperator& op) {
  op.validate(f.n);
  ZonalFunction g{f.n, f.coeffs};
  for (int j = 0; j <= f.degree(); ++j) {
    const double m = op.multiplier(f.n, j);
    g.coeffs[j] = m == 0.0 ? 0.0 : m * f.coeffs[j];
  }
  return g;
}

double zonal_cosine_direct(int n, const std::function<double(double)>& profile, double alpha,
                           double t0, int J) {
  if (n < 2) throw std::invalid_argument("dimension n must be >= 2");
  if (alpha < kZonalDirectAlphaMin || alpha > kZonalDirectAlphaMax) {
    std::ostringstream msg;
    msg << "direct cosine quadrature is validated for alpha in [" << kZonalDirectAlphaMin << ", "
        << kZonalDirectAlphaMax << "], got " << alpha;
    throw QuadratureWindow(msg.str());
  }
  require_admissible(n, alpha, Family::cosine);
  if (t0 < -1.0 || t0 > 1.0) throw std::invalid_argument("t0 must lie in [-1, 1]");

  // theta = s u + sqrt(1-s^2) omega, omega uniform on the sphere of u-perp;
  // theta.e = s t0 + sqrt(1-s^2) sqrt(1-t0^2) x with x = omega.e'.
  const auto polar = abs_power_rule(n, alpha, J / 2 + 4);
  QuadratureRule azimuth;
  if (n == 2) {
    azimuth.nodes = {-1.0, 1.0};
    azimuth.weights = {0.5, 0.5};
  } else if (n == 3) {
    azimuth = periodic_trapezoid(4 * J + 8);
    for (double& phi : azimuth.nodes) phi = std::cos(phi);
  } else {
    const double e = 0.5 * (n - 4);
    azimuth = jacobi_rule(J / 2 + 4, e, e);
  }
  const double r0 = std::sqrt(std::max(0.0, 1.0 - t0 * t0));
  double sum = 0.0;
  for (std::size_t a = 0; a < polar.size(); ++a) {
    const double s = polar.nodes[a];
    const double rs = std::sqrt(std::max(0.0, 1.0 - s * s));
    double inner = 0.0;
    for (std::size_t b = 0; b < azimuth.size(); ++b) {
      inner += azimuth.weights[b] * profile(s * t0 + rs * r0 * azimuth.nodes[b]);
    }
    sum += polar.weights[a] * inner;
  }
  return constant(Constant::cosine_norm, n, 0, alpha) * abs_power_mass(n, alpha) * sum;
}

}  // namespace coslab
