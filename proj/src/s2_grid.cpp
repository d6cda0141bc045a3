#include "coslab/s2_grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "coslab/errors.hpp"
#include "coslab/quadrature.hpp"

namespace coslab {

S2Grid S2Grid::make(int n_theta, int n_phi) {
  if (n_theta < 1) throw GridTooCoarse("grid needs at least one ring");
  if (n_phi % 2 != 0 || n_phi < 2 * n_theta) {
    std::ostringstream msg;
    msg << "n_phi must be even and >= 2 n_theta (got n_theta=" << n_theta << ", n_phi=" << n_phi << ")";
    throw GridTooCoarse(msg.str());
  }
  S2Grid g;
  g.n_theta = n_theta;
  g.n_phi = n_phi;
  const auto rule = gauss_legendre_rule(n_theta);
  g.cos_theta.resize(n_theta);
  g.ring_weight.resize(n_theta);
  // Enforce exact mirror symmetry so the antipodal map is a grid permutation.
  for (int i = 0; i < n_theta; ++i) {
    const int m = n_theta - 1 - i;
    const double x = 0.5 * (rule.nodes[m] - rule.nodes[i]);
    g.cos_theta[i] = i == m ? 0.0 : x;
    g.ring_weight[i] = 0.5 * (rule.weights[i] + rule.weights[m]);
  }
  g.sin_theta.resize(n_theta);
  for (int i = 0; i < n_theta; ++i) {
    g.sin_theta[i] = std::sqrt(std::max(0.0, (1.0 - g.cos_theta[i]) * (1.0 + g.cos_theta[i])));
  }
  g.phi.resize(n_phi);
  for (int k = 0; k < n_phi; ++k) g.phi[k] = 2.0 * std::numbers::pi * k / n_phi;
  return g;
}

Vec3 S2Grid::point(std::size_t idx) const {
  const std::size_t ring = idx / n_phi;
  const std::size_t k = idx % n_phi;
  const double s = sin_theta[ring];
  return {s * std::cos(phi[k]), s * std::sin(phi[k]), cos_theta[ring]};
}

std::size_t S2Grid::antipode(std::size_t idx) const {
  const std::size_t ring = idx / n_phi;
  const std::size_t k = idx % n_phi;
  return index(n_theta - 1 - static_cast<int>(ring), static_cast<int>((k + n_phi / 2) % n_phi));
}

int S2Grid::max_band_limit() const { return std::min(n_theta - 1, (n_phi - 1) / 2); }

GridFunction GridFunction::sample(const S2Grid& grid, const std::function<double(const Vec3&)>& f) {
  GridFunction out{grid, std::vector<double>(grid.size())};
  for (std::size_t idx = 0; idx < grid.size(); ++idx) out.values[idx] = f(grid.point(idx));
  return out;
}

GridFunction GridFunction::constant(const S2Grid& grid, double c) {
  return GridFunction{grid, std::vector<double>(grid.size(), c)};
}

namespace {
void require_same_grid(const GridFunction& f, const GridFunction& g) {
  if (!(f.grid == g.grid)) throw std::invalid_argument("grid functions live on different grids");
}
}  // namespace

double inner(const GridFunction& f, const GridFunction& g) {
  require_same_grid(f, g);
  double total = 0.0;
  for (int i = 0; i < f.grid.n_theta; ++i) {
    double ring = 0.0;
    for (int k = 0; k < f.grid.n_phi; ++k) {
      const auto idx = f.grid.index(i, k);
      ring += f.values[idx] * g.values[idx];
    }
    total += f.grid.ring_weight[i] * ring / f.grid.n_phi;
  }
  return total;
}

double max_abs_diff(const GridFunction& f, const GridFunction& g) {
  require_same_grid(f, g);
  double m = 0.0;
  for (std::size_t k = 0; k < f.values.size(); ++k) m = std::max(m, std::abs(f.values[k] - g.values[k]));
  return m;
}

double max_abs(const GridFunction& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::abs(v));
  return m;
}

double min_value(const GridFunction& f) { return *std::min_element(f.values.begin(), f.values.end()); }

double odd_energy_fraction(const GridFunction& f) {
  GridFunction odd = f;
  for (std::size_t idx = 0; idx < f.values.size(); ++idx) {
    odd.values[idx] = 0.5 * (f.values[idx] - f.values[f.grid.antipode(idx)]);
  }
  const double total = inner(f, f);
  return total > 0.0 ? inner(odd, odd) / total : 0.0;
}

GridFunction even_part(const GridFunction& f) {
  GridFunction out = f;
  for (std::size_t idx = 0; idx < f.values.size(); ++idx) {
    out.values[idx] = 0.5 * (f.values[idx] + f.values[f.grid.antipode(idx)]);
  }
  return out;
}

}  // namespace coslab
