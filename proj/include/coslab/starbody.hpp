#pragma once

// Origin-symmetric star bodies given by their radial functions: on the S^2
// grid for n = 3, or as zonal profiles for any n.

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "coslab/identity.hpp"
#include "coslab/s2_grid.hpp"
#include "coslab/zonal.hpp"

namespace coslab {

struct ShapeSpec {
  enum class Kind { ball, ellipsoid, lp_ball };
  Kind kind = Kind::ball;
  double r = 1.0;             ///< ball radius
  std::vector<double> axes;   ///< ellipsoid semi-axes (size n)
  double p = 2.0;             ///< lp_ball exponent
};

struct Resolution {
  int n_theta = 48;
  int n_phi = 96;
  int zonal_degree = 32;      ///< degree of the zonal projection
  bool zonal = false;         ///< force the zonal representation for n = 3
};

struct StarBody {
  int n = 3;
  std::variant<GridFunction, ZonalFunction> repr;
  std::string shape = "custom";
  nlohmann::json params = nlohmann::json::object();

  bool is_grid() const { return std::holds_alternative<GridFunction>(repr); }
  const GridFunction& grid() const { return std::get<GridFunction>(repr); }
  const ZonalFunction& zonal() const { return std::get<ZonalFunction>(repr); }
};

/// Throws BadShapeParams for non-positive parameters and for shapes with no
/// zonal representation when n != 3.
StarBody make_body(int n, const ShapeSpec& shape, const Resolution& res = {});

/// Wraps a sampled radial function after validate_body.
StarBody body_from_grid(GridFunction rho, std::string shape = "custom");

/// Throws NonPositiveBody if rho <= 0 somewhere, OddInput if rho is not even.
void validate_body(const StarBody& body, double odd_tol = 1e-8);

/// rho_K(theta); for grid bodies evaluated by harmonic synthesis.
double radial_value(const StarBody& body, const Vec3& theta);

/// Busemann/Lutwak intersection body: rho_K(theta) = vol_{n-1}(L cap theta^perp).
StarBody intersection_body(const StarBody& L);

/// K = IB_i(L): vol_i(K cap xi) = vol_{n-i}(L cap xi^perp), from
/// rho_K^i = i / (pi^{i-n/2} (n-i)) M^{1-i} rho_L^{n-i}. Throws NonPositiveBody
/// when the right-hand side is not strictly positive.
StarBody i_intersection_body(const StarBody& L, int i);

struct ClassifyOptions {
  double smoothing_t = 0.98;
  double margin = 1e-7;
  int band_limit = 24;
  double odd_tol = 1e-8;
};

struct ClassVerdict {
  enum class Member { yes, no, inconclusive };
  double alpha = 0.0;
  Member member = Member::inconclusive;
  double min_value = 0.0;
  double margin = 0.0;
  double smoothing_t = 0.0;
  double tail_energy = 0.0;  ///< energy fraction of rho^alpha above degree L-4
  int band_limit = 0;
};
std::string to_string(ClassVerdict::Member m);

/// Sign test of the Poisson-smoothed density Pi_t M^{1-n+alpha} rho_K^alpha.
ClassVerdict classify_K_alpha(const StarBody& K, double alpha, const ClassifyOptions& opts = {});

/// M^{1-n+alpha} applied to rho_B^alpha = 1: Gamma((n-alpha)/2) / Gamma(alpha/2).
double ball_class_sign(int n, double alpha);

/// Embedding of (R^n, ||.||_K) into L_p, via membership in K_{-p,n}.
ClassVerdict embeds_in_Lp(const StarBody& K, double p, const ClassifyOptions& opts = {});

/// Checks K = IB_i(L) for n = 3 grid bodies on one grid: the section-volume
/// identity (quadrature) and the M^{1-n+i} relation (spectral).
IdentityReport i_intersection_pair_check(const StarBody& K, const StarBody& L, int i, double tol = 1e-6);

/// n = 3, i = 1: rho_K = R_2^* nu with density g on planes; verifies
/// R_1 rho_K = R_{2,perp} mu for mu = R_1^* nu^perp.
IdentityReport istar_chain_check(const GridFunction& g, double tol = 1e-8);

}  // namespace coslab
