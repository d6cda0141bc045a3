#pragma once

// Identity suites over zonal profiles and star bodies. The multiplier and S^2
// suites live next to their modules (check_identities, verify_s2_suite).

#include <cstdint>
#include <vector>

#include "coslab/identity.hpp"
#include "coslab/s2_grid.hpp"
#include "coslab/zonal.hpp"

namespace coslab {

/// Seeded random zonal function of degree J with coefficients U(-1, 1) / (1 + j)^2.
ZonalFunction random_zonal(int n, int J, std::uint64_t seed);

/// Seeded nonnegative zonal function: the square of a random degree-J/2 profile.
ZonalFunction random_nonnegative_zonal(int n, int J, std::uint64_t seed);

/// Seeded smooth, strictly positive, even radial function on `grid`:
/// 1 + amplitude * g / max|g| for a random even g of degree L.
GridFunction random_radial(const S2Grid& grid, int L, std::uint64_t seed, double amplitude = 0.25);

struct ZonalSuiteOptions {
  std::vector<int> dims{3, 4, 5};
  int degree = 16;
  double tol_exact = 1e-12;       ///< analysis/synthesis round trip
  double tol_quadrature = 1e-8;   ///< direct vs spectral M^alpha
  double tol_positivity = 1e-8;
  std::uint64_t seed = 7;
  int samples = 5;
  int positivity_samples = 100;
};

/// Round trip, direct-vs-spectral M^alpha on 21 points, and positivity of
/// A_{0.5,-0.5} on nonnegative profiles (n = 3).
std::vector<IdentityReport> verify_zonal_suite(const ZonalSuiteOptions& opts = {});

struct StarbodySuiteOptions {
  int n_theta = 48;
  int n_phi = 96;
  int band_limit = 12;           ///< degree of the random bodies
  double tol = 1e-6;             ///< quadrature-limited body identities
  double tol_exact = 1e-10;      ///< closed forms
  std::uint64_t seed = 7;
  int bodies = 3;
};

/// Unit-ball class exclusion (n = 3 and 5), intersection body of balls,
/// IB_2 pair checks, the i*-chain, and classification of intersection bodies.
std::vector<IdentityReport> verify_starbody_suite(const StarbodySuiteOptions& opts = {});

/// Orders used by the ball-exclusion sweep: linspace(-3, 2.9, 59) for n = 3
/// and -2.95 + 0.3k, k = 0..39 for other n.
std::vector<double> ball_sweep_alphas(int n);

}  // namespace coslab
