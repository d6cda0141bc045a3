#pragma once

// Operators on S^2 (n = 3): spectral application of any diagonal family, and
// direct (kernel-quadrature) versions of the cosine, sine, Radon, dual Radon,
// Funk and Poisson transforms. Functions on G_{3,1} and G_{3,2} are even grid
// functions keyed by line directions and plane normals respectively.

#include <optional>

#include "coslab/multipliers.hpp"
#include "coslab/s2_grid.hpp"
#include "coslab/s2_harmonics.hpp"

namespace coslab {

struct GrassmannFunctionS2 {
  enum class Kind { lines, planes };
  Kind kind = Kind::lines;
  GridFunction repr;

  /// phi^perp: a line and its orthogonal plane share the key vector.
  GrassmannFunctionS2 perp() const {
    return {kind == Kind::lines ? Kind::planes : Kind::lines, repr};
  }
  /// Subspace dimension i (1 for lines, 2 for planes).
  int dim() const { return kind == Kind::lines ? 1 : 2; }
};

/// Validated order window of the direct S^2 quadratures.
inline constexpr double kDirectAlphaMin = 0.1;
inline constexpr double kDirectAlphaMax = 3.0;

HarmonicCoeffs apply_spectral(const HarmonicCoeffs& c, const SpectralOperator& op);
/// analyze -> apply_spectral -> synthesize at band limit L (default: effective band limit of f).
GridFunction apply_spectral(const GridFunction& f, const SpectralOperator& op, std::optional<int> L = {});

/// Band limit used to evaluate f off the grid: L if given, else detected.
HarmonicCoeffs resolve_coeffs(const GridFunction& f, std::optional<int> L);

GridFunction cosine_direct(const GridFunction& f, double alpha, std::optional<int> L = {});
GridFunction funk_direct(const GridFunction& f, std::optional<int> L = {});
/// Q^alpha on S^2: kernel (1 - (theta.u)^2)^{(alpha-2)/2}.
GridFunction sine_direct(const GridFunction& f, double alpha, std::optional<int> L = {});
GridFunction poisson_direct(const GridFunction& f, double t, std::optional<int> L = {});

/// R_1 f on one line: (f(u) + f(-u)) / 2.
double radon_r1(const GridFunction& f, const Vec3& line, std::optional<int> L = {});

/// R_i f for i = 1 (lines) or i = 2 (planes, Funk transform at the normal).
GrassmannFunctionS2 radon(const GridFunction& f, int i, std::optional<int> L = {});

/// R_i^* phi. Throws OddInput when the representation is not even.
GridFunction dual_radon(const GrassmannFunctionS2& phi, std::optional<int> L = {});

/// R_i^alpha f by direct quadrature.
GrassmannFunctionS2 ri_alpha_direct(const GridFunction& f, int i, double alpha, std::optional<int> L = {});

/// Throws OddInput when max|f(u) - f(-u)| exceeds tol * max(1, max|f|).
void require_even(const GridFunction& f, double tol = 1e-10);

}  // namespace coslab
