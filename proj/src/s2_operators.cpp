#include "coslab/s2_operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "coslab/errors.hpp"
#include "coslab/quadrature.hpp"
#include "coslab/s2_kernels.hpp"

namespace coslab {
namespace {

void require_window(double alpha) {
  if (alpha < kDirectAlphaMin || alpha > kDirectAlphaMax) {
    std::ostringstream msg;
    msg << "direct quadrature is validated for alpha in [" << kDirectAlphaMin << ", " << kDirectAlphaMax
        << "], got " << alpha << "; use the spectral method";
    throw QuadratureWindow(msg.str());
  }
}

// On the circle at height t about a node, a degree-L function is a
// trigonometric polynomial of degree L, and its circle average is a polynomial
// of degree L in t. The |t| rule pairs +-t, so it only sees degree L/2 in t^2.
// Each count leaves one spare node.
int polar_nodes(int L) { return L / 4 + 2; }
int polar_nodes_symmetric(int L) { return L / 2 + 2; }
int azimuth_points(int L) { return L + 2; }

}  // namespace

HarmonicCoeffs apply_spectral(const HarmonicCoeffs& c, const SpectralOperator& op) {
  op.validate(3);
  HarmonicCoeffs out(c.L);
  for (int j = 0; j <= c.L; ++j) {
    const double m = op.multiplier(3, j);
    if (m == 0.0) continue;
    for (int k = -j; k <= j; ++k) out.at(j, k) = m * c.at(j, k);
  }
  return out;
}

HarmonicCoeffs resolve_coeffs(const GridFunction& f, std::optional<int> L) {
  return L ? analyze(f, *L) : band_limited(f);
}

GridFunction apply_spectral(const GridFunction& f, const SpectralOperator& op, std::optional<int> L) {
  return synthesize(apply_spectral(resolve_coeffs(f, L), op), f.grid);
}

GridFunction cosine_direct(const GridFunction& f, double alpha, std::optional<int> L) {
  require_window(alpha);
  require_admissible(3, alpha, Family::cosine);
  const HarmonicEvaluator eval(resolve_coeffs(f, L));
  const int band = eval.band_limit();
  ZonalKernelRule rule{abs_power_rule(3, alpha, polar_nodes(band)), azimuth_points(band),
                       constant(Constant::cosine_norm, 3, 0, alpha) * abs_power_mass(3, alpha)};
  return integrate_zonal_kernel(eval, f.grid, rule);
}

GridFunction funk_direct(const GridFunction& f, std::optional<int> L) {
  const HarmonicEvaluator eval(resolve_coeffs(f, L));
  ZonalKernelRule rule{QuadratureRule{{0.0}, {1.0}}, azimuth_points(eval.band_limit()), 1.0};
  return integrate_zonal_kernel(eval, f.grid, rule);
}

namespace {
GridFunction sine_kernel(const GridFunction& f, double alpha, double norm, std::optional<int> L) {
  const HarmonicEvaluator eval(resolve_coeffs(f, L));
  const int band = eval.band_limit();
  ZonalKernelRule rule{sine_power_rule(3, alpha - 2.0, polar_nodes_symmetric(band)), azimuth_points(band),
                       norm * sine_power_mass(3, alpha - 2.0)};
  return integrate_zonal_kernel(eval, f.grid, rule);
}
}  // namespace

GridFunction sine_direct(const GridFunction& f, double alpha, std::optional<int> L) {
  require_window(alpha);
  require_admissible(3, alpha, Family::sine);
  return sine_kernel(f, alpha, constant(Constant::sine_norm, 3, 0, alpha), L);
}

GridFunction poisson_direct(const GridFunction& f, double t, std::optional<int> L) {
  if (!(t >= 0.0 && t < 1.0)) throw std::invalid_argument("Poisson parameter t must lie in [0, 1)");
  const HarmonicEvaluator eval(resolve_coeffs(f, L));
  const int band = eval.band_limit();
  // The kernel (1-t^2)/(1+t^2-2ts)^{3/2} is analytic inside a Bernstein
  // ellipse of parameter s0 + sqrt(s0^2-1), s0 = (1+t^2)/(2t).
  int n = 32;
  if (t > 0.0) {
    const double s0 = (1.0 + t * t) / (2.0 * t);
    const double log_rho = std::acosh(s0);
    n = std::clamp(static_cast<int>(std::ceil(20.0 / log_rho)) + band, 32, 4000);
  }
  ZonalKernelRule rule{gauss_legendre_rule(n), azimuth_points(band), 1.0};
  for (std::size_t a = 0; a < rule.polar.size(); ++a) {
    const double s = rule.polar.nodes[a];
    rule.polar.weights[a] *= (1.0 - t * t) / std::pow(1.0 + t * t - 2.0 * t * s, 1.5);
  }
  return integrate_zonal_kernel(eval, f.grid, rule);
}

double radon_r1(const GridFunction& f, const Vec3& line, std::optional<int> L) {
  const double norm = std::sqrt(dot(line, line));
  if (std::abs(norm - 1.0) > 1e-12) throw std::invalid_argument("line direction must be a unit vector");
  const HarmonicEvaluator eval(resolve_coeffs(f, L));
  return 0.5 * (eval(line) + eval(Vec3{-line[0], -line[1], -line[2]}));
}

GrassmannFunctionS2 radon(const GridFunction& f, int i, std::optional<int> L) {
  if (i == 1) return {GrassmannFunctionS2::Kind::lines, even_part(f)};
  if (i == 2) return {GrassmannFunctionS2::Kind::planes, funk_direct(f, L)};
  throw std::invalid_argument("on S^2 the Radon transform needs i in {1, 2}");
}

void require_even(const GridFunction& f, double tol) {
  double odd = 0.0;
  for (std::size_t idx = 0; idx < f.values.size(); ++idx) {
    odd = std::max(odd, std::abs(f.values[idx] - f.values[f.grid.antipode(idx)]));
  }
  if (odd > tol * std::max(1.0, max_abs(f))) {
    std::ostringstream msg;
    msg << "function on a Grassmannian must be even; max |f(u) - f(-u)| = " << odd;
    throw OddInput(msg.str());
  }
}

GridFunction dual_radon(const GrassmannFunctionS2& phi, std::optional<int> L) {
  require_even(phi.repr);
  if (phi.kind == GrassmannFunctionS2::Kind::lines) return phi.repr;
  return funk_direct(phi.repr, L);
}

GrassmannFunctionS2 ri_alpha_direct(const GridFunction& f, int i, double alpha, std::optional<int> L) {
  require_window(alpha);
  if (i == 2) {
    require_admissible(3, alpha, Family::radon, 2);
    require_admissible(3, alpha, Family::cosine);
    return {GrassmannFunctionS2::Kind::planes, cosine_direct(f, alpha, L)};
  }
  if (i == 1) {
    require_admissible(3, alpha, Family::radon, 1);
    return {GrassmannFunctionS2::Kind::lines,
            sine_kernel(f, alpha, constant(Constant::radon_norm, 3, 1, alpha), L)};
  }
  throw std::invalid_argument("on S^2 R_i^alpha needs i in {1, 2}");
}

}  // namespace coslab
