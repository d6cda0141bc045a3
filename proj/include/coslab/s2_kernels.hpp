#pragma once

// Integration of a band-limited function against a zonal kernel k(theta.u)
// at every node u of an output grid. The kernel lives in the polar rule: its
// weights already include k (or a Gauss-Jacobi rule absorbs it), so
//   out(u) = scale * sum_a w_a * mean_b f(t_a u + sqrt(1-t_a^2) (cos phi_b e1 + sin phi_b e2)).

#include "coslab/quadrature.hpp"
#include "coslab/s2_grid.hpp"
#include "coslab/s2_harmonics.hpp"

namespace coslab {

struct ZonalKernelRule {
  QuadratureRule polar;  ///< nodes t in [-1, 1]
  int n_azimuth = 8;     ///< periodic trapezoid points on each circle t = const
  double scale = 1.0;
};

/// Orthonormal e1, e2 completing u to a right-handed frame.
void tangent_frame(const Vec3& u, Vec3& e1, Vec3& e2);

double integrate_at(const HarmonicEvaluator& f, const Vec3& u, const ZonalKernelRule& rule);

/// OpenMP over output nodes; each node's sum is serial, so results do not
/// depend on the thread count.
GridFunction integrate_zonal_kernel(const HarmonicEvaluator& f, const S2Grid& out, const ZonalKernelRule& rule);

/// Single-threaded loop over the same per-node sums.
GridFunction integrate_zonal_kernel_reference(const HarmonicEvaluator& f, const S2Grid& out,
                                              const ZonalKernelRule& rule);

}  // namespace coslab
