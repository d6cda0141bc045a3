#include "coslab/s2_kernels.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "coslab/parallel.hpp"

namespace coslab {

void tangent_frame(const Vec3& u, Vec3& e1, Vec3& e2) {
  // Helper axis: the coordinate axis least aligned with u.
  Vec3 a{0.0, 0.0, 0.0};
  const double ax = std::abs(u[0]), ay = std::abs(u[1]), az = std::abs(u[2]);
  if (ax <= ay && ax <= az) a[0] = 1.0;
  else if (ay <= az) a[1] = 1.0;
  else a[2] = 1.0;
  const double d = dot(a, u);
  e1 = {a[0] - d * u[0], a[1] - d * u[1], a[2] - d * u[2]};
  const double n = std::sqrt(dot(e1, e1));
  for (double& x : e1) x /= n;
  e2 = {u[1] * e1[2] - u[2] * e1[1], u[2] * e1[0] - u[0] * e1[2], u[0] * e1[1] - u[1] * e1[0]};
}

double integrate_at(const HarmonicEvaluator& f, const Vec3& u, const ZonalKernelRule& rule) {
  Vec3 e1, e2;
  tangent_frame(u, e1, e2);
  const int nb = rule.n_azimuth;
  std::vector<double> cphi(nb), sphi(nb);
  for (int b = 0; b < nb; ++b) {
    const double phi = 2.0 * std::numbers::pi * b / nb;
    cphi[b] = std::cos(phi);
    sphi[b] = std::sin(phi);
  }
  double total = 0.0;
  for (std::size_t a = 0; a < rule.polar.size(); ++a) {
    const double t = rule.polar.nodes[a];
    const double s = std::sqrt(std::max(0.0, (1.0 - t) * (1.0 + t)));
    double ring = 0.0;
    for (int b = 0; b < nb; ++b) {
      const double c = s * cphi[b], d = s * sphi[b];
      const Vec3 p{t * u[0] + c * e1[0] + d * e2[0], t * u[1] + c * e1[1] + d * e2[1],
                   t * u[2] + c * e1[2] + d * e2[2]};
      ring += f(p);
    }
    total += rule.polar.weights[a] * ring / nb;
  }
  return rule.scale * total;
}

GridFunction integrate_zonal_kernel(const HarmonicEvaluator& f, const S2Grid& out, const ZonalKernelRule& rule) {
  GridFunction g{out, std::vector<double>(out.size())};
  const long n = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(thread_count())
  for (long idx = 0; idx < n; ++idx) g.values[idx] = integrate_at(f, out.point(idx), rule);
  return g;
}

GridFunction integrate_zonal_kernel_reference(const HarmonicEvaluator& f, const S2Grid& out,
                                              const ZonalKernelRule& rule) {
  GridFunction g{out, std::vector<double>(out.size())};
  for (std::size_t idx = 0; idx < out.size(); ++idx) g.values[idx] = integrate_at(f, out.point(idx), rule);
  return g;
}

}  // namespace coslab
