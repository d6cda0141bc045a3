#include "coslab/starbody.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "coslab/errors.hpp"
#include "coslab/gamma.hpp"
#include "coslab/s2_harmonics.hpp"
#include "coslab/s2_operators.hpp"

namespace coslab {
namespace {

constexpr double pi = std::numbers::pi;

std::vector<double> dense_t(int count = 201) {
  std::vector<double> t(count);
  for (int k = 0; k < count; ++k) t[k] = -1.0 + 2.0 * k / (count - 1);
  return t;
}

// Samples of a zonal profile used for positivity and minimum checks: the
// quadrature nodes plus an equispaced set including the poles.
std::vector<double> zonal_probe_points(int n, int J) {
  auto t = dense_t();
  const auto rule = gauss_jacobi_rule(n, J + 9);
  t.insert(t.end(), rule.nodes.begin(), rule.nodes.end());
  return t;
}

ZonalFunction project_power(const ZonalFunction& rho, double power, int J) {
  return zonal_project(rho.n, [&](double t) { return std::pow(rho(t), power); }, J);
}

GridFunction pow_grid(const GridFunction& f, double power) {
  GridFunction out = f;
  for (double& v : out.values) v = std::pow(v, power);
  return out;
}

double ellipsoid_radius(const std::vector<double>& axes, const double* theta, int n) {
  double s = 0.0;
  for (int k = 0; k < n; ++k) s += theta[k] * theta[k] / (axes[k] * axes[k]);
  return 1.0 / std::sqrt(s);
}

}  // namespace

StarBody make_body(int n, const ShapeSpec& shape, const Resolution& res) {
  if (n < 2) throw BadShapeParams("dimension n must be >= 2");
  StarBody body;
  body.n = n;
  std::function<double(const Vec3&)> grid_rho;
  std::function<double(double)> zonal_rho;
  switch (shape.kind) {
    case ShapeSpec::Kind::ball: {
      if (!(shape.r > 0.0)) throw BadShapeParams("ball radius must be positive");
      const double r = shape.r;
      grid_rho = [r](const Vec3&) { return r; };
      zonal_rho = [r](double) { return r; };
      body.shape = "ball";
      body.params = {{"r", r}};
      break;
    }
    case ShapeSpec::Kind::ellipsoid: {
      const auto& a = shape.axes;
      if (static_cast<int>(a.size()) != n) throw BadShapeParams("ellipsoid needs n semi-axes");
      for (double x : a) {
        if (!(x > 0.0)) throw BadShapeParams("ellipsoid semi-axes must be positive");
      }
      grid_rho = [a](const Vec3& u) { return ellipsoid_radius(a, u.data(), 3); };
      bool axial = true;
      for (int k = 1; k < n - 1; ++k) axial = axial && a[k] == a[0];
      if (axial) {
        const double a0 = a[0], c = a[n - 1];
        zonal_rho = [a0, c](double t) { return 1.0 / std::sqrt((1.0 - t * t) / (a0 * a0) + t * t / (c * c)); };
      }
      body.shape = "ellipsoid";
      body.params = {{"axes", a}};
      break;
    }
    case ShapeSpec::Kind::lp_ball: {
      if (!(shape.p > 0.0)) throw BadShapeParams("lp_ball exponent must be positive");
      const double p = shape.p;
      grid_rho = [p](const Vec3& u) {
        double s = 0.0;
        for (double x : u) s += std::pow(std::abs(x), p);
        return std::pow(s, -1.0 / p);
      };
      if (p == 2.0) zonal_rho = [](double) { return 1.0; };
      body.shape = "lp_ball";
      body.params = {{"p", p}};
      break;
    }
  }
  if (n == 3 && !res.zonal) {
    body.repr = GridFunction::sample(S2Grid::make(res.n_theta, res.n_phi), grid_rho);
  } else {
    if (!zonal_rho) {
      throw BadShapeParams("shape '" + body.shape + "' has no zonal representation; only n = 3 grids support it");
    }
    body.repr = zonal_project(n, zonal_rho, res.zonal_degree);
  }
  validate_body(body);
  return body;
}

StarBody body_from_grid(GridFunction rho, std::string shape) {
  StarBody body;
  body.n = 3;
  body.repr = std::move(rho);
  body.shape = std::move(shape);
  validate_body(body);
  return body;
}

void validate_body(const StarBody& body, double odd_tol) {
  if (body.is_grid()) {
    const auto& g = body.grid();
    const double lo = min_value(g);
    if (!(lo > 0.0)) {
      std::ostringstream msg;
      msg << "radial function must be strictly positive (min " << lo << ")";
      throw NonPositiveBody(msg.str());
    }
    const double odd = odd_energy_fraction(g);
    if (odd > odd_tol) {
      std::ostringstream msg;
      msg << "body is not origin-symmetric (odd energy fraction " << odd << ")";
      throw OddInput(msg.str());
    }
    return;
  }
  const auto& z = body.zonal();
  double odd = 0.0, total = 0.0;
  for (int j = 0; j <= z.degree(); ++j) {
    total += z.coeffs[j] * z.coeffs[j];
    if (j % 2 == 1) odd += z.coeffs[j] * z.coeffs[j];
  }
  if (total > 0.0 && odd / total > odd_tol) throw OddInput("zonal body is not origin-symmetric");
  for (double t : zonal_probe_points(z.n, z.degree())) {
    if (!(z(t) > 0.0)) throw NonPositiveBody("zonal radial function must be strictly positive");
  }
}

double radial_value(const StarBody& body, const Vec3& theta) {
  if (!body.is_grid()) throw std::invalid_argument("radial_value(Vec3) needs a grid body; evaluate the zonal profile");
  const HarmonicEvaluator eval(band_limited(body.grid()));
  return eval(theta);
}

StarBody intersection_body(const StarBody& L) {
  validate_body(L);
  StarBody K;
  K.n = L.n;
  K.shape = "intersection_body";
  K.params = {{"of", L.shape}};
  const double c = constant(Constant::intersection_body, L.n);
  if (L.is_grid()) {
    GridFunction rho = funk_direct(pow_grid(L.grid(), L.n - 1));
    for (double& v : rho.values) v *= c;
    K.repr = std::move(rho);
  } else {
    const auto& z = L.zonal();
    auto f = zonal_apply(project_power(z, L.n - 1, z.degree()), SpectralOperator::funk());
    for (double& a : f.coeffs) a *= c;
    K.repr = std::move(f);
  }
  validate_body(K);
  return K;
}

StarBody i_intersection_body(const StarBody& L, int i) {
  const int n = L.n;
  if (i < 1 || i > n - 1) throw std::invalid_argument("i must lie in [1, n-1]");
  validate_body(L);
  const double c = i / (std::pow(pi, i - 0.5 * n) * (n - i));
  const auto op = SpectralOperator::cosine(1.0 - i);
  StarBody K;
  K.n = n;
  K.shape = "i_intersection_body";
  K.params = {{"of", L.shape}, {"i", i}};
  if (L.is_grid()) {
    GridFunction rho_i = apply_spectral(pow_grid(L.grid(), n - i), op);
    for (double& v : rho_i.values) {
      v *= c;
      if (!(v > 0.0)) throw NonPositiveBody("IB_i(L) does not exist: M^{1-i} rho_L^{n-i} is not positive");
      v = std::pow(v, 1.0 / i);
    }
    K.repr = std::move(rho_i);
  } else {
    const auto& z = L.zonal();
    const int J = z.degree();
    auto rho_i = zonal_apply(project_power(z, n - i, J), op);
    for (double& a : rho_i.coeffs) a *= c;
    for (double t : zonal_probe_points(n, J)) {
      if (!(rho_i(t) > 0.0)) throw NonPositiveBody("IB_i(L) does not exist: M^{1-i} rho_L^{n-i} is not positive");
    }
    K.repr = zonal_project(n, [&](double t) { return std::pow(rho_i(t), 1.0 / i); }, J);
  }
  validate_body(K);
  return K;
}

std::string to_string(ClassVerdict::Member m) {
  switch (m) {
    case ClassVerdict::Member::yes: return "yes";
    case ClassVerdict::Member::no: return "no";
    case ClassVerdict::Member::inconclusive: break;
  }
  return "inconclusive";
}

ClassVerdict classify_K_alpha(const StarBody& K, double alpha, const ClassifyOptions& opts) {
  const int n = K.n;
  require_admissible(n, alpha, Family::body_class);
  if (!(opts.smoothing_t > 0.0 && opts.smoothing_t < 1.0)) {
    throw std::invalid_argument("smoothing parameter t must lie in (0, 1)");
  }
  validate_body(K, opts.odd_tol);
  const double order = 1.0 - n + alpha;
  const int L = opts.band_limit;

  ClassVerdict v;
  v.alpha = alpha;
  v.margin = opts.margin;
  v.smoothing_t = opts.smoothing_t;
  v.band_limit = L;
  if (K.is_grid()) {
    const auto c = analyze(pow_grid(K.grid(), alpha), L);
    v.tail_energy = tail_energy_fraction(c, L - 4);
    // Degrees above the effective band limit hold only rounding noise, which
    // the multipliers would amplify (they grow like j^{n/2 - alpha}).
    const int top = effective_band_limit(c);
    HarmonicCoeffs mu(L);
    for (int j = 0; j <= top; j += 2) {
      const double m = m_mult(n, j, order) * poisson_mult(j, opts.smoothing_t);
      for (int k = -j; k <= j; ++k) mu.at(j, k) = m * c.at(j, k);
    }
    v.min_value = min_value(synthesize(mu, K.grid().grid));
  } else {
    const auto& z = K.zonal();
    const auto c = project_power(z, alpha, L);
    double total = 0.0, tail = 0.0;
    for (int j = 0; j <= L; ++j) {
      total += c.coeffs[j] * c.coeffs[j];
      if (j > L - 4) tail += c.coeffs[j] * c.coeffs[j];
    }
    v.tail_energy = total > 0.0 ? tail / total : 0.0;
    int top = L;
    while (top > 0 && c.coeffs[top] * c.coeffs[top] <= 1e-26 * total) --top;
    ZonalFunction mu{n, c.coeffs};
    for (int j = 0; j <= L; ++j) {
      mu.coeffs[j] = j % 2 == 0 && j <= top ? m_mult(n, j, order) * poisson_mult(j, opts.smoothing_t) * c.coeffs[j] : 0.0;
    }
    double lo = mu(1.0);
    for (double t : zonal_probe_points(n, L)) lo = std::min(lo, mu(t));
    v.min_value = lo;
  }
  if (v.min_value >= opts.margin) v.member = ClassVerdict::Member::yes;
  else if (v.min_value <= -opts.margin) v.member = ClassVerdict::Member::no;
  return v;
}

double ball_class_sign(int n, double alpha) {
  return gamma_ratio({0.5 * (n - alpha)}, {0.5 * alpha});
}

ClassVerdict embeds_in_Lp(const StarBody& K, double p, const ClassifyOptions& opts) {
  if (!(p > 0.0)) throw std::invalid_argument("p must be positive");
  return classify_K_alpha(K, -p, opts);
}

namespace {

GridFunction scaled(GridFunction f, double c) {
  for (double& v : f.values) v *= c;
  return f;
}

// R_k g keyed by the subspace's own vector (line direction or plane normal).
GridFunction radon_keyed(const GridFunction& g, int k) { return radon(g, k).repr; }

}  // namespace

IdentityReport i_intersection_pair_check(const StarBody& K, const StarBody& L, int i, double tol) {
  if (K.n != 3 || L.n != 3 || !K.is_grid() || !L.is_grid()) {
    throw RepresentationMismatch("pair check needs two n = 3 grid bodies");
  }
  if (!(K.grid().grid == L.grid().grid)) throw RepresentationMismatch("pair check needs bodies on the same grid");
  if (i != 1 && i != 2) throw std::invalid_argument("on S^2 the pair check needs i in {1, 2}");
  const int n = 3;
  const auto& rk = K.grid();
  const auto& rl = L.grid();

  // sigma_{i-1}/i R_i rho_K^i = sigma_{n-i-1}/(n-i) R_{n-i,perp} rho_L^{n-i}
  const GridFunction lhs = scaled(radon_keyed(pow_grid(rk, i), i), sphere_area(i) / i);
  const GridFunction rhs = scaled(radon_keyed(pow_grid(rl, n - i), n - i), sphere_area(n - i) / (n - i));
  const double sections = max_abs_diff(lhs, rhs);

  // rho_L^{n-i} = pi^{i-n/2} (n-i)/i M^{1-n+i} rho_K^i
  const double c = std::pow(pi, i - 0.5 * n) * (n - i) / i;
  const GridFunction kl = scaled(apply_spectral(pow_grid(rk, i), SpectralOperator::cosine(1.0 - n + i)), c);
  const double spectral = max_abs_diff(kl, pow_grid(rl, n - i));

  IdentityReport r{"i_intersection_pair"};
  r.params.n = n;
  r.params.i = i;
  r.metric = ErrorMetric::absolute;
  r.accumulate(sections, 0.0);
  r.accumulate(spectral, 0.0);
  std::ostringstream note;
  note << "section-volume residual " << sections << ", M^{1-n+i} residual " << spectral;
  r.note = note.str();
  r.finalize(tol);
  return r;
}

IdentityReport istar_chain_check(const GridFunction& g, double tol) {
  require_even(g);
  const GrassmannFunctionS2 nu{GrassmannFunctionS2::Kind::planes, g};
  const GridFunction rho_k = dual_radon(nu);
  if (!(min_value(rho_k) > 0.0)) throw NonPositiveBody("R_2^* nu is not strictly positive");
  const GridFunction mu = dual_radon(nu.perp());
  const GridFunction lhs = radon(rho_k, 1).repr;
  const GridFunction rhs = radon(mu, 2).repr;

  IdentityReport r{"istar_chain"};
  r.params.n = 3;
  r.params.i = 1;
  r.metric = ErrorMetric::absolute;
  r.accumulate(max_abs_diff(lhs, rhs), 0.0);
  r.finalize(tol);
  return r;
}

}  // namespace coslab
