#pragma once

// Closed-form Fourier-Laplace multipliers of the rotation-intertwining
// operator families on S^{n-1}, and the normalization constants that relate
// them. Everything here is a pure function of its arguments.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coslab/identity.hpp"

namespace coslab {

/// Area of the unit sphere S^{n-1} in R^n: 2 pi^{n/2} / Gamma(n/2). Requires n >= 1.
double sphere_area(int n);

/// Operator families whose order parameter has an excluded lattice.
enum class Family {
  cosine,     ///< M^alpha: {1, 3, 5, ...}
  sine,       ///< Q^alpha: {n, n+2, ...}
  radon,      ///< R_i^alpha: {n-i, n-i+2, ...}
  body_class  ///< K_{alpha,n}: {0, -2, -4, ...} U {n, n+2, ...}
};

/// True iff alpha is within kPoleEps of the family's excluded lattice.
/// `i` is only used for Family::radon.
bool excluded(int n, double alpha, Family family, int i = 0);

/// Human-readable description of the excluded lattice, for error messages.
std::string excluded_lattice(int n, Family family, int i = 0);

/// Throws ExcludedParameter when excluded(n, alpha, family, i).
void require_admissible(int n, double alpha, Family family, int i = 0);

/// m_{j,alpha}: multiplier of the generalized cosine transform M^alpha.
double m_mult(int n, int j, double alpha);

/// Multiplier of the generalized sine transform Q^alpha.
double q_mult(int n, int j, double alpha);

enum class PoissonSide { plus, minus };

/// Multipliers of the Poisson-integral operators Q_+^{mu,nu} and Q_-^{mu,nu}.
double qpm_mult(int n, int j, double mu, double nu, PoissonSide side);

/// a_{alpha,beta}(j) with M^alpha = M^beta A_{alpha,beta}.
double a_mult(int n, int j, double alpha, double beta);

/// Multiplier of the Minkowski-Funk transform (normalized great-sphere average).
double funk_mult(int n, int j);

/// Poisson integral multiplier t^j, 0 <= t < 1.
double poisson_mult(int j, double t);

/// Parameters (mu, nu) such that a_{alpha,beta} = q+^{mu,nu_plus} * q-^{mu,nu_minus}.
struct PoissonFactorization {
  double mu;
  double nu_plus;
  double nu_minus;
};
PoissonFactorization a_factorization(double alpha, double beta);

enum class Constant {
  cosine_norm,          ///< gamma_n(alpha)
  radon_norm,           ///< gamma_{n,i}(alpha)
  sine_norm,            ///< normalization of Q^alpha
  radon_limit,          ///< c_i = sigma_{i-1} / (2 pi^{(i-1)/2})
  funk_limit,           ///< c_{n-1}
  lambda1,              ///< Gamma((n-1)/2) / (sigma_{n-1} Gamma((n-i)/2))
  lambda2,              ///< Gamma((n-1)/2) / Gamma((n-i)/2)
  radon_square,         ///< c in R_i^* R_i = c Q^{i-1}
  cosine_radon,         ///< 2 pi^{(i-1)/2} / sigma_{i-1}, R_i M^alpha vs R^{alpha+i-1}_{n-i,perp}
  koldobsky_tilde,      ///< sigma_{n-i-1} pi^{i-n/2} / sigma_{i-1}
  dual_tilde,           ///< pi^{i-n/2} sigma_{n-i-1} / sigma_{i-1}
  intersection_body,    ///< sigma_{n-2} / (n-1)
  i_intersection,       ///< pi^{i-n/2} (n-i) / i
  right_inverse_funk,   ///< sigma_{n-2} / (2 pi^{n/2-1})
  right_inverse_radon,  ///< pi^{(1-i)/2} sigma_{n-2} / sigma_{n-i-1}
  right_inverse_sine,   ///< pi^{1-i} sigma_{n-2} sigma_{i-1} / (2 sigma_{n-i-1})
  range_forward,        ///< 2 pi^{(i-1)/2} / sigma_{i-1}
  range_backward,       ///< pi^{(1-i)/2} sigma_{i-1} / 2
};

/// Evaluates the named constant. Throws GammaPole for gamma arguments on poles
/// and std::invalid_argument when i is out of [1, n-1] where it is used.
double constant(Constant name, int n, int i = 0, double alpha = 0.0);

/// Looks a constant up by its snake_case name; throws UnknownConstant.
Constant constant_from_name(std::string_view name);
std::string_view constant_name(Constant c);

/// A diagonal (rotation-intertwining) operator, described by its family and
/// parameters. Only the fields the family uses are read.
struct SpectralOperator {
  enum class Kind { cosine, sine, poisson_plus, poisson_minus, smoothing_a, funk, poisson };
  Kind kind = Kind::funk;
  double alpha = 0.0;
  double beta = 0.0;
  double mu = 0.0;
  double nu = 0.0;
  double t = 0.0;

  static SpectralOperator cosine(double alpha) { return {Kind::cosine, alpha}; }
  static SpectralOperator sine(double alpha) { return {Kind::sine, alpha}; }
  static SpectralOperator q_plus(double mu, double nu) { return {Kind::poisson_plus, 0, 0, mu, nu}; }
  static SpectralOperator q_minus(double mu, double nu) { return {Kind::poisson_minus, 0, 0, mu, nu}; }
  static SpectralOperator smoothing(double alpha, double beta) { return {Kind::smoothing_a, alpha, beta}; }
  static SpectralOperator funk() { return {Kind::funk}; }
  static SpectralOperator poisson(double t) { return {Kind::poisson, 0, 0, 0, 0, t}; }

  /// Checks admissibility for dimension n (throws ExcludedParameter or std::invalid_argument).
  void validate(int n) const;
  /// Eigenvalue on degree-j harmonics in dimension n.
  double multiplier(int n, int j) const;
  /// Table of multipliers for j = 0..jmax.
  std::vector<double> table(int n, int jmax) const;
  std::string name() const;
};

struct IdentityCheckOptions {
  int jmax = 200;
  std::vector<double> alpha_grid;
  /// Second parameter for the A_{alpha,beta} factorizations; defaults to alpha_grid.
  std::vector<double> beta_grid;
  /// Orders used by the large-degree asymptotic check.
  std::vector<double> asymptotic_alphas{-1.0, 0.0, 0.5, 2.0};
  double tol = 1e-10;
};

struct IdentityCheckResult {
  std::vector<IdentityReport> reports;
  std::vector<SkippedCheck> skipped;
};

/// Runs the closed-form multiplier identities in dimension n: inversion
/// M^alpha M^{2-n-alpha} = I, semigroup M^alpha M^0 = Q^{alpha+n-2}, both
/// A_{alpha,beta} factorizations, R_i^* R_i proportional to Q^{i-1}, and the
/// large-degree asymptotics of m_{j,alpha}.
IdentityCheckResult check_identities(int n, const IdentityCheckOptions& options);

/// `count` points evenly spaced in the open interval (lo, hi), cell-centred.
std::vector<double> cell_centred_grid(double lo, double hi, int count);

}  // namespace coslab
