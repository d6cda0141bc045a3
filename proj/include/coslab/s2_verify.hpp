#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coslab/identity.hpp"
#include "coslab/s2_grid.hpp"
#include "coslab/s2_harmonics.hpp"

namespace coslab {

/// Seeded random band-limited coefficients: c_jk ~ U(-1, 1) (1 + j)^{-2},
/// odd degrees zeroed when `even` is set.
HarmonicCoeffs random_coeffs(int L, std::uint64_t seed, bool even = true);

struct S2SuiteOptions {
  int band_limit = 12;
  int n_theta = 48;
  int n_phi = 96;
  double tol_quadrature = 1e-6;  ///< identities that go through a direct quadrature
  double tol_spectral = 1e-8;    ///< exact or spectral-only chains
  double tol_limit = 1e-3;       ///< Richardson-extrapolated alpha -> 0 limit
  std::uint64_t seed = 7;
  int samples = 5;               ///< random functions per identity
  /// Identity groups to run (names in s2_suite_groups()); empty runs all.
  std::vector<std::string> groups;
};

/// Group names accepted by S2SuiteOptions::groups, in run order.
const std::vector<std::string>& s2_suite_groups();

/// Runs the geometric identities on S^2; one report per identity and parameter set.
std::vector<IdentityReport> verify_s2_suite(const S2SuiteOptions& opts = {});

}  // namespace coslab
