#pragma once

// Gauss-Legendre (in cos theta) x equiangular (in phi) grids on S^2 and
// functions sampled on them. Quadrature weights form a probability measure.

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace coslab {

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

struct S2Grid {
  int n_theta = 0;
  int n_phi = 0;
  std::vector<double> cos_theta;    ///< ring colatitude cosines, north to south
  std::vector<double> sin_theta;
  std::vector<double> ring_weight;  ///< Gauss-Legendre weights / 1, summing to 1
  std::vector<double> phi;          ///< 2 pi k / n_phi

  /// Requires n_theta >= 1 and n_phi even with n_phi >= 2 n_theta.
  static S2Grid make(int n_theta, int n_phi);

  std::size_t size() const { return static_cast<std::size_t>(n_theta) * n_phi; }
  std::size_t index(int ring, int k) const { return static_cast<std::size_t>(ring) * n_phi + k; }
  double weight(std::size_t idx) const { return ring_weight[idx / n_phi] / n_phi; }
  Vec3 point(std::size_t idx) const;
  /// Index of the node at -point(idx); the grid is closed under the antipodal map.
  std::size_t antipode(std::size_t idx) const;
  /// Largest band limit analyze() accepts: min(n_theta - 1, (n_phi - 1) / 2).
  int max_band_limit() const;

  bool operator==(const S2Grid& other) const { return n_theta == other.n_theta && n_phi == other.n_phi; }
};

struct GridFunction {
  S2Grid grid;
  std::vector<double> values;  ///< row-major, ring by ring

  static GridFunction sample(const S2Grid& grid, const std::function<double(const Vec3&)>& f);
  static GridFunction constant(const S2Grid& grid, double c);
};

/// Quadrature of f g against the probability measure.
double inner(const GridFunction& f, const GridFunction& g);
double max_abs_diff(const GridFunction& f, const GridFunction& g);
double max_abs(const GridFunction& f);
double min_value(const GridFunction& f);
/// Share of the L2 energy carried by the odd part f(u) - f(-u).
double odd_energy_fraction(const GridFunction& f);
/// (f(u) + f(-u)) / 2 on the same grid.
GridFunction even_part(const GridFunction& f);

}  // namespace coslab
