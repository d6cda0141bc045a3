#pragma once

// Gauss-Jacobi rules normalized to probability measures, and the derived
// rules that absorb the singular kernels of the direct operators.

#include <vector>

namespace coslab {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;  ///< sum to 1

  std::size_t size() const { return nodes.size(); }
};

/// Three-term recurrence x p_k = b_{k+1} p_{k+1} + a_k p_k + b_k p_{k-1} of the
/// polynomials orthonormal for (1-x)^a (1+x)^b on [-1, 1] (probability normalized).
struct JacobiRecurrence {
  std::vector<double> diag;      ///< a_0 .. a_{N-1}
  std::vector<double> offdiag;   ///< b_1 .. b_N (offdiag[k] = b_{k+1})
};
JacobiRecurrence jacobi_recurrence(int N, double a, double b);

/// N-point Gauss rule for (1-x)^a (1+x)^b on [-1, 1], a, b > -1. Nodes ascending.
QuadratureRule jacobi_rule(int N, double a, double b);

/// Gauss rule for the weight (1-t^2)^{(n-3)/2} induced on u.theta by the
/// uniform measure of S^{n-1}. n >= 2.
QuadratureRule gauss_jacobi_rule(int n, int N);

QuadratureRule gauss_legendre_rule(int N);

/// Rule for |t|^{alpha-1} (1-t^2)^{(n-3)/2} on [-1, 1], alpha > 0. Symmetric
/// nodes +-sqrt(r_k) from a Jacobi rule in r = t^2; exact for polynomials in t
/// of degree <= 4N-1.
QuadratureRule abs_power_rule(int n, double alpha, int N);

/// E|theta.u|^{alpha-1} for theta uniform on S^{n-1}.
double abs_power_mass(int n, double alpha);

/// Rule for (1-t^2)^{p/2} (1-t^2)^{(n-3)/2} on [-1, 1], p > 1-n.
QuadratureRule sine_power_rule(int n, double p, int N);

/// E(1-(theta.u)^2)^{p/2} for theta uniform on S^{n-1}.
double sine_power_mass(int n, double p);

/// N equally spaced angles 2 pi k / N with weights 1/N.
QuadratureRule periodic_trapezoid(int N);

}  // namespace coslab
