#pragma once

// Real spherical harmonics on S^2, orthonormal for the probability measure:
// Y_{j,0} = P_j0(cos t), Y_{j,k} = P_jk(cos t) cos(k phi) and
// Y_{j,-k} = P_jk(cos t) sin(k phi) for k > 0, with P_jm the fully
// normalized (4 pi) associated Legendre functions.

#include <cstddef>
#include <vector>

#include "coslab/s2_grid.hpp"

namespace coslab {

struct HarmonicCoeffs {
  int L = 0;
  std::vector<double> c;  ///< j-major, k ascending: index j^2 + j + k

  HarmonicCoeffs() = default;
  explicit HarmonicCoeffs(int band_limit)
      : L(band_limit), c(static_cast<std::size_t>(band_limit + 1) * (band_limit + 1), 0.0) {}

  static std::size_t index(int j, int k) { return static_cast<std::size_t>(j * j + j + k); }
  double& at(int j, int k) { return c[index(j, k)]; }
  double at(int j, int k) const { return c[index(j, k)]; }
};

/// P_jm(x) for 0 <= m <= j <= L, stored at j(j+1)/2 + m. s = sqrt(1 - x^2).
void legendre_table(int L, double x, double s, std::vector<double>& out);
inline std::size_t legendre_index(int j, int m) { return static_cast<std::size_t>(j * (j + 1) / 2 + m); }

/// Coefficients by grid quadrature (OpenMP over rings, fixed-order reduction).
/// Throws GridTooCoarse when L exceeds grid.max_band_limit().
HarmonicCoeffs analyze(const GridFunction& f, int L);
GridFunction synthesize(const HarmonicCoeffs& c, const S2Grid& grid);

/// Serial node-by-node versions, kept as oracles for the ring-based kernels.
HarmonicCoeffs analyze_reference(const GridFunction& f, int L);
GridFunction synthesize_reference(const HarmonicCoeffs& c, const S2Grid& grid);

/// Highest degree whose energy exceeds rel_tol^2 times the total energy.
int effective_band_limit(const HarmonicCoeffs& c, double rel_tol = 1e-13);
HarmonicCoeffs truncate(const HarmonicCoeffs& c, int L);
/// Analyzes at the grid's maximum band limit and truncates the negligible tail.
HarmonicCoeffs band_limited(const GridFunction& f, double rel_tol = 1e-13);

double parseval_energy(const HarmonicCoeffs& c);
/// Fraction of energy carried by degrees > j0.
double tail_energy_fraction(const HarmonicCoeffs& c, int j0);
double odd_energy_fraction(const HarmonicCoeffs& c);

/// Evaluates sum c_jk Y_jk at arbitrary points of S^2 in O(L^2) without
/// allocation; safe to share between threads.
class HarmonicEvaluator {
public:
  explicit HarmonicEvaluator(HarmonicCoeffs coeffs);
  double operator()(const Vec3& p) const;
  int band_limit() const { return c_.L; }
  const HarmonicCoeffs& coeffs() const { return c_; }

private:
  HarmonicCoeffs c_;
  std::vector<double> a_;  // P_jm = a x P_{j-1,m} - b P_{j-2,m}
  std::vector<double> b_;
};

}  // namespace coslab
