#include "coslab/s2_harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "coslab/errors.hpp"
#include "coslab/parallel.hpp"

namespace coslab {
namespace {

double rec_a(int j, int m) {
  return std::sqrt(static_cast<double>((2 * j - 1) * (2 * j + 1)) / ((j - m) * (j + m)));
}

double rec_b(int j, int m) {
  return std::sqrt(static_cast<double>(2 * j + 1) * (j + m - 1) * (j - m - 1) /
                   (static_cast<double>(j - m) * (j + m) * (2 * j - 3)));
}

void require_resolved(const S2Grid& grid, int L) {
  if (L < 0) throw std::invalid_argument("band limit must be >= 0");
  if (L > grid.max_band_limit()) {
    std::ostringstream msg;
    msg << "grid " << grid.n_theta << "x" << grid.n_phi << " resolves band limit "
        << grid.max_band_limit() << ", requested " << L;
    throw GridTooCoarse(msg.str());
  }
}

struct TrigTable {
  std::vector<double> cos, sin;
  explicit TrigTable(int n) : cos(n), sin(n) {
    for (int q = 0; q < n; ++q) {
      cos[q] = std::cos(2.0 * std::numbers::pi * q / n);
      sin[q] = std::sin(2.0 * std::numbers::pi * q / n);
    }
  }
};

}  // namespace

void legendre_table(int L, double x, double s, std::vector<double>& out) {
  out.assign(legendre_index(L, L) + 1, 0.0);
  double pmm = 1.0;
  for (int m = 0; m <= L; ++m) {
    if (m == 1) pmm = std::sqrt(3.0) * s;
    if (m >= 2) pmm *= std::sqrt((2.0 * m + 1.0) / (2.0 * m)) * s;
    out[legendre_index(m, m)] = pmm;
    if (m + 1 > L) break;
    out[legendre_index(m + 1, m)] = std::sqrt(2.0 * m + 3.0) * x * pmm;
    for (int j = m + 2; j <= L; ++j) {
      out[legendre_index(j, m)] =
          rec_a(j, m) * x * out[legendre_index(j - 1, m)] - rec_b(j, m) * out[legendre_index(j - 2, m)];
    }
  }
}

HarmonicCoeffs analyze(const GridFunction& f, int L) {
  const S2Grid& g = f.grid;
  require_resolved(g, L);
  const std::size_t ncoef = static_cast<std::size_t>(L + 1) * (L + 1);
  std::vector<double> partial(static_cast<std::size_t>(g.n_theta) * ncoef, 0.0);
  const TrigTable trig(g.n_phi);

#pragma omp parallel for schedule(static) num_threads(thread_count())
  for (int i = 0; i < g.n_theta; ++i) {
    std::vector<double> p;
    legendre_table(L, g.cos_theta[i], g.sin_theta[i], p);
    double* out = partial.data() + static_cast<std::size_t>(i) * ncoef;
    const double* row = f.values.data() + g.index(i, 0);
    const double w = g.ring_weight[i] / g.n_phi;
    for (int m = 0; m <= L; ++m) {
      double am = 0.0, bm = 0.0;
      for (int k = 0; k < g.n_phi; ++k) {
        const int q = static_cast<int>((static_cast<long>(m) * k) % g.n_phi);
        am += row[k] * trig.cos[q];
        bm += row[k] * trig.sin[q];
      }
      for (int j = m; j <= L; ++j) {
        const double pj = w * p[legendre_index(j, m)];
        out[HarmonicCoeffs::index(j, m)] = pj * am;
        if (m > 0) out[HarmonicCoeffs::index(j, -m)] = pj * bm;
      }
    }
  }

  HarmonicCoeffs c(L);
  for (int i = 0; i < g.n_theta; ++i) {
    const double* in = partial.data() + static_cast<std::size_t>(i) * ncoef;
    for (std::size_t q = 0; q < ncoef; ++q) c.c[q] += in[q];
  }
  return c;
}

GridFunction synthesize(const HarmonicCoeffs& c, const S2Grid& g) {
  require_resolved(g, c.L);
  const int L = c.L;
  GridFunction f{g, std::vector<double>(g.size(), 0.0)};
  const TrigTable trig(g.n_phi);

#pragma omp parallel for schedule(static) num_threads(thread_count())
  for (int i = 0; i < g.n_theta; ++i) {
    std::vector<double> p;
    legendre_table(L, g.cos_theta[i], g.sin_theta[i], p);
    std::vector<double> a(L + 1, 0.0), b(L + 1, 0.0);
    for (int m = 0; m <= L; ++m) {
      for (int j = m; j <= L; ++j) {
        a[m] += c.at(j, m) * p[legendre_index(j, m)];
        if (m > 0) b[m] += c.at(j, -m) * p[legendre_index(j, m)];
      }
    }
    double* row = f.values.data() + g.index(i, 0);
    for (int k = 0; k < g.n_phi; ++k) {
      double v = 0.0;
      for (int m = 0; m <= L; ++m) {
        const int q = static_cast<int>((static_cast<long>(m) * k) % g.n_phi);
        v += a[m] * trig.cos[q] + b[m] * trig.sin[q];
      }
      row[k] = v;
    }
  }
  return f;
}

HarmonicCoeffs analyze_reference(const GridFunction& f, int L) {
  require_resolved(f.grid, L);
  HarmonicCoeffs c(L);
  std::vector<double> p;
  for (std::size_t idx = 0; idx < f.grid.size(); ++idx) {
    const std::size_t ring = idx / f.grid.n_phi;
    const double phi = f.grid.phi[idx % f.grid.n_phi];
    legendre_table(L, f.grid.cos_theta[ring], f.grid.sin_theta[ring], p);
    const double wf = f.grid.weight(idx) * f.values[idx];
    for (int j = 0; j <= L; ++j) {
      c.at(j, 0) += wf * p[legendre_index(j, 0)];
      for (int k = 1; k <= j; ++k) {
        c.at(j, k) += wf * p[legendre_index(j, k)] * std::cos(k * phi);
        c.at(j, -k) += wf * p[legendre_index(j, k)] * std::sin(k * phi);
      }
    }
  }
  return c;
}

GridFunction synthesize_reference(const HarmonicCoeffs& c, const S2Grid& grid) {
  require_resolved(grid, c.L);
  GridFunction f{grid, std::vector<double>(grid.size(), 0.0)};
  std::vector<double> p;
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const std::size_t ring = idx / grid.n_phi;
    const double phi = grid.phi[idx % grid.n_phi];
    legendre_table(c.L, grid.cos_theta[ring], grid.sin_theta[ring], p);
    double v = 0.0;
    for (int j = 0; j <= c.L; ++j) {
      v += c.at(j, 0) * p[legendre_index(j, 0)];
      for (int k = 1; k <= j; ++k) {
        v += p[legendre_index(j, k)] * (c.at(j, k) * std::cos(k * phi) + c.at(j, -k) * std::sin(k * phi));
      }
    }
    f.values[idx] = v;
  }
  return f;
}

namespace {
double degree_energy(const HarmonicCoeffs& c, int j) {
  double e = 0.0;
  for (int k = -j; k <= j; ++k) e += c.at(j, k) * c.at(j, k);
  return e;
}
}  // namespace

int effective_band_limit(const HarmonicCoeffs& c, double rel_tol) {
  const double total = parseval_energy(c);
  for (int j = c.L; j > 0; --j) {
    if (degree_energy(c, j) > rel_tol * rel_tol * total) return j;
  }
  return 0;
}

HarmonicCoeffs truncate(const HarmonicCoeffs& c, int L) {
  HarmonicCoeffs out(L);
  const int keep = std::min(L, c.L);
  std::copy_n(c.c.begin(), static_cast<std::size_t>(keep + 1) * (keep + 1), out.c.begin());
  return out;
}

HarmonicCoeffs band_limited(const GridFunction& f, double rel_tol) {
  const auto full = analyze(f, f.grid.max_band_limit());
  return truncate(full, effective_band_limit(full, rel_tol));
}

double parseval_energy(const HarmonicCoeffs& c) {
  double e = 0.0;
  for (double v : c.c) e += v * v;
  return e;
}

double tail_energy_fraction(const HarmonicCoeffs& c, int j0) {
  const double total = parseval_energy(c);
  if (total == 0.0) return 0.0;
  double tail = 0.0;
  for (int j = std::max(0, j0 + 1); j <= c.L; ++j) tail += degree_energy(c, j);
  return tail / total;
}

double odd_energy_fraction(const HarmonicCoeffs& c) {
  const double total = parseval_energy(c);
  if (total == 0.0) return 0.0;
  double odd = 0.0;
  for (int j = 1; j <= c.L; j += 2) odd += degree_energy(c, j);
  return odd / total;
}

HarmonicEvaluator::HarmonicEvaluator(HarmonicCoeffs coeffs) : c_(std::move(coeffs)) {
  const int L = c_.L;
  a_.assign(legendre_index(L, L) + 1, 0.0);
  b_.assign(legendre_index(L, L) + 1, 0.0);
  for (int m = 0; m <= L; ++m) {
    for (int j = m + 2; j <= L; ++j) {
      a_[legendre_index(j, m)] = rec_a(j, m);
      b_[legendre_index(j, m)] = rec_b(j, m);
    }
  }
}

double HarmonicEvaluator::operator()(const Vec3& p) const {
  const int L = c_.L;
  const double z = p[2];
  const double rho = std::sqrt(p[0] * p[0] + p[1] * p[1]);
  const double c1 = rho > 0.0 ? p[0] / rho : 1.0;
  const double s1 = rho > 0.0 ? p[1] / rho : 0.0;
  double result = 0.0;
  double pmm = 1.0, cm = 1.0, sm = 0.0;
  for (int m = 0; m <= L; ++m) {
    if (m > 0) {
      pmm *= (m == 1 ? std::sqrt(3.0) : std::sqrt((2.0 * m + 1.0) / (2.0 * m))) * rho;
      const double cn = cm * c1 - sm * s1;
      sm = sm * c1 + cm * s1;
      cm = cn;
    }
    double am = c_.at(m, m) * pmm;
    double bm = m > 0 ? c_.at(m, -m) * pmm : 0.0;
    if (m + 1 <= L) {
      double prev = pmm;
      double cur = std::sqrt(2.0 * m + 3.0) * z * pmm;
      am += c_.at(m + 1, m) * cur;
      if (m > 0) bm += c_.at(m + 1, -m) * cur;
      for (int j = m + 2; j <= L; ++j) {
        const std::size_t q = legendre_index(j, m);
        const double next = a_[q] * z * cur - b_[q] * prev;
        prev = cur;
        cur = next;
        am += c_.at(j, m) * cur;
        if (m > 0) bm += c_.at(j, -m) * cur;
      }
    }
    result += am * cm + bm * sm;
  }
  return result;
}

}  // namespace coslab
