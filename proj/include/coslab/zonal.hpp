#pragma once

// Zonal (axis-symmetric) functions on S^{n-1}, expanded in Gegenbauer
// polynomials orthonormal for the probability measure induced on t = theta.e.

#include <functional>
#include <span>
#include <vector>

#include "coslab/multipliers.hpp"
#include "coslab/quadrature.hpp"

namespace coslab {

struct ZonalFunction {
  int n = 3;
  std::vector<double> coeffs;  ///< a_0 .. a_J

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  /// Profile value f(t) = sum a_j Z_j(t).
  double operator()(double t) const;
};

/// Z_0(t) .. Z_J(t) for dimension n.
std::vector<double> zonal_basis(int n, int J, double t);

/// a_j = sum_k w_k f(t_k) Z_j(t_k). The rule must have at least J+1 nodes
/// (exact to degree 2J) for the weight of gauss_jacobi_rule(n, .).
ZonalFunction zonal_analyze(int n, const QuadratureRule& rule, std::span<const double> samples, int J);

/// Projects a callable profile onto degrees <= J with an (J+1)+extra node rule.
ZonalFunction zonal_project(int n, const std::function<double(double)>& profile, int J, int extra_nodes = 8);

std::vector<double> zonal_synth(const ZonalFunction& f, std::span<const double> t);

/// Coefficient-wise action of a diagonal operator.
ZonalFunction zonal_apply(const ZonalFunction& f, const SpectralOperator& op);

/// Direct-quadrature window for zonal_cosine_direct.
inline constexpr double kZonalDirectAlphaMin = 0.5;
inline constexpr double kZonalDirectAlphaMax = 3.0;

/// gamma_n(alpha) int_{S^{n-1}} f(theta.e) |theta.u|^{alpha-1} d theta at a
/// point u with u.e = t0, by a tensor rule: Gauss-Jacobi in s = theta.u with
/// the |s|^{alpha-1} weight absorbed, and the exact rule for the remaining
/// sphere variable. `J` is the polynomial degree of the profile the rule must
/// integrate exactly.
double zonal_cosine_direct(int n, const std::function<double(double)>& profile, double alpha,
                           double t0, int J);

}  // namespace coslab
