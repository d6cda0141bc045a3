#include "coslab/multipliers.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "coslab/errors.hpp"
#include "coslab/gamma.hpp"

namespace coslab {
namespace {

constexpr double pi = std::numbers::pi;

void require_dim(int n) {
  if (n < 2) throw std::invalid_argument("dimension n must be >= 2");
}

void require_degree(int j) {
  if (j < 0) throw std::invalid_argument("degree j must be >= 0");
}

void require_codim(int n, int i) {
  if (i < 1 || i > n - 1) {
    std::ostringstream msg;
    msg << "subspace dimension i=" << i << " outside [1, " << n - 1 << "]";
    throw std::invalid_argument(msg.str());
  }
}

// alpha in {start, start + 2*step, ...} (step = +1 ascending, -1 descending).
bool near_lattice(double alpha, double start, int direction) {
  const double offset = (alpha - start) * direction;
  if (offset < -kPoleEps) return false;
  const double k = std::nearbyint(offset / 2.0);
  return std::abs(offset - 2.0 * k) <= kPoleEps;
}

double sign_of_half(int j) { return (j / 2) % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

double sphere_area(int n) {
  if (n < 1) throw std::invalid_argument("sphere_area requires n >= 1");
  return 2.0 * std::pow(pi, 0.5 * n) / std::tgamma(0.5 * n);
}

bool excluded(int n, double alpha, Family family, int i) {
  switch (family) {
    case Family::cosine: return near_lattice(alpha, 1.0, +1);
    case Family::sine: return near_lattice(alpha, n, +1);
    case Family::radon: return near_lattice(alpha, n - i, +1);
    case Family::body_class: return near_lattice(alpha, 0.0, -1) || near_lattice(alpha, n, +1);
  }
  return false;
}

std::string excluded_lattice(int n, Family family, int i) {
  std::ostringstream s;
  switch (family) {
    case Family::cosine: s << "M^alpha excludes alpha in {1, 3, 5, ...}"; break;
    case Family::sine: s << "Q^alpha excludes alpha in {" << n << ", " << n + 2 << ", ...}"; break;
    case Family::radon:
      s << "R_" << i << "^alpha excludes alpha in {" << n - i << ", " << n - i + 2 << ", ...}";
      break;
    case Family::body_class:
      s << "K_{alpha," << n << "} excludes alpha in {0, -2, -4, ...} U {" << n << ", " << n + 2
        << ", ...}";
      break;
  }
  return s.str();
}

void require_admissible(int n, double alpha, Family family, int i) {
  if (!std::isfinite(alpha)) throw ExcludedParameter("order parameter is not finite");
  if (excluded(n, alpha, family, i)) {
    std::ostringstream msg;
    msg << "alpha=" << alpha << " is excluded: " << excluded_lattice(n, family, i);
    throw ExcludedParameter(msg.str());
  }
}

double m_mult(int n, int j, double alpha) {
  require_dim(n);
  require_degree(j);
  require_admissible(n, alpha, Family::cosine);
  if (j % 2 != 0) return 0.0;
  const double top = 0.5 * (j + 1 - alpha);
  if (near_gamma_pole(top)) {
    std::ostringstream msg;
    msg << "m_{j,alpha} numerator pole at j=" << j << ", alpha=" << alpha;
    throw NumeratorPole(msg.str());
  }
  return sign_of_half(j) * gamma_ratio({top}, {0.5 * (j + n - 1 + alpha)});
}

double q_mult(int n, int j, double alpha) {
  require_dim(n);
  require_degree(j);
  require_admissible(n, alpha, Family::sine);
  if (j % 2 != 0) return 0.0;
  return gamma_ratio({0.5 * (j + n - 1 - alpha), 0.5 * (j + 1)},
                     {0.5 * (j + alpha + 1), 0.5 * (j + n - 1)});
}

double qpm_mult(int n, int j, double mu, double nu, PoissonSide side) {
  require_dim(n);
  require_degree(j);
  if (side == PoissonSide::plus) {
    return gamma_ratio({0.5 * (j + n - nu + 1)}, {0.5 * (j + n - nu + 1 + mu)});
  }
  return gamma_ratio({0.5 * (j + nu - mu)}, {0.5 * (j + nu)});
}

double a_mult(int n, int j, double alpha, double beta) {
  require_dim(n);
  require_degree(j);
  require_admissible(n, alpha, Family::cosine);
  require_admissible(n, beta, Family::cosine);
  return gamma_ratio({0.5 * (j + 1 - alpha), 0.5 * (j + n - 1 + beta)},
                     {0.5 * (j + n - 1 + alpha), 0.5 * (j + 1 - beta)});
}

PoissonFactorization a_factorization(double alpha, double beta) {
  // The Q_+ factor needs nu = 2 - beta for its multiplier to reproduce the
  // Gamma((j+n-1+beta)/2) / Gamma((j+n-1+alpha)/2) half of a_{alpha,beta}.
  return {alpha - beta, 2.0 - beta, 1.0 - beta};
}

double funk_mult(int n, int j) {
  require_dim(n);
  require_degree(j);
  if (j % 2 != 0) return 0.0;
  return m_mult(n, j, 0.0) / constant(Constant::funk_limit, n);
}

double poisson_mult(int j, double t) {
  require_degree(j);
  if (!(t >= 0.0 && t < 1.0)) throw std::invalid_argument("Poisson parameter t must lie in [0, 1)");
  return j == 0 ? 1.0 : std::pow(t, j);
}

double constant(Constant name, int n, int i, double alpha) {
  require_dim(n);
  auto sigma = [](int k) { return sphere_area(k + 1); };  // area of S^k
  switch (name) {
    case Constant::cosine_norm:
      return sigma(n - 1) / (2.0 * std::pow(pi, 0.5 * (n - 1))) *
             gamma_ratio({0.5 * (1.0 - alpha)}, {0.5 * alpha});
    case Constant::radon_norm:
      require_codim(n, i);
      return sigma(n - 1) / (2.0 * std::pow(pi, 0.5 * (n - 1))) *
             gamma_ratio({0.5 * (n - alpha - i)}, {0.5 * alpha});
    case Constant::sine_norm:
      return sigma(n - 1) / (2.0 * std::pow(pi, 0.5 * (n - 1))) *
             gamma_ratio({0.5 * (n - 1 - alpha)}, {0.5 * alpha});
    case Constant::radon_limit:
      require_codim(n, i);
      return sigma(i - 1) / (2.0 * std::pow(pi, 0.5 * (i - 1)));
    case Constant::funk_limit:
      return sigma(n - 2) / (2.0 * std::pow(pi, 0.5 * (n - 2)));
    case Constant::lambda1:
      require_codim(n, i);
      return gamma_ratio({0.5 * (n - 1)}, {0.5 * (n - i)}) / sigma(n - 1);
    case Constant::lambda2:
      require_codim(n, i);
      return gamma_ratio({0.5 * (n - 1)}, {0.5 * (n - i)});
    case Constant::radon_square:
      require_codim(n, i);
      return 2.0 * std::pow(pi, 0.5 * (i - 1)) / sigma(i - 1) *
             gamma_ratio({0.5 * (n - 1)}, {0.5 * (n - i)});
    case Constant::cosine_radon:
    case Constant::range_forward:
      require_codim(n, i);
      return 2.0 * std::pow(pi, 0.5 * (i - 1)) / sigma(i - 1);
    case Constant::koldobsky_tilde:
    case Constant::dual_tilde:
      require_codim(n, i);
      return sigma(n - i - 1) * std::pow(pi, i - 0.5 * n) / sigma(i - 1);
    case Constant::intersection_body:
      return sigma(n - 2) / (n - 1);
    case Constant::i_intersection:
      require_codim(n, i);
      return std::pow(pi, i - 0.5 * n) * (n - i) / i;
    case Constant::right_inverse_funk:
      return sigma(n - 2) / (2.0 * std::pow(pi, 0.5 * n - 1.0));
    case Constant::right_inverse_radon:
      require_codim(n, i);
      return std::pow(pi, 0.5 * (1 - i)) * sigma(n - 2) / sigma(n - i - 1);
    case Constant::right_inverse_sine:
      require_codim(n, i);
      return std::pow(pi, 1.0 - i) * sigma(n - 2) * sigma(i - 1) / (2.0 * sigma(n - i - 1));
    case Constant::range_backward:
      require_codim(n, i);
      return std::pow(pi, 0.5 * (1 - i)) * sigma(i - 1) / 2.0;
  }
  throw UnknownConstant("unknown constant");
}

namespace {
constexpr std::array<std::pair<Constant, std::string_view>, 19> kConstantNames{{
    {Constant::cosine_norm, "cosine_norm"},
    {Constant::radon_norm, "radon_norm"},
    {Constant::sine_norm, "sine_norm"},
    {Constant::radon_limit, "radon_limit"},
    {Constant::funk_limit, "funk_limit"},
    {Constant::lambda1, "lambda1"},
    {Constant::lambda2, "lambda2"},
    {Constant::radon_square, "radon_square"},
    {Constant::cosine_radon, "cosine_radon"},
    {Constant::koldobsky_tilde, "koldobsky_tilde"},
    {Constant::dual_tilde, "dual_tilde"},
    {Constant::intersection_body, "intersection_body"},
    {Constant::i_intersection, "i_intersection"},
    {Constant::right_inverse_funk, "right_inverse_funk"},
    {Constant::right_inverse_radon, "right_inverse_radon"},
    {Constant::right_inverse_sine, "right_inverse_sine"},
    {Constant::range_forward, "range_forward"},
    {Constant::range_backward, "range_backward"},
    {Constant::funk_limit, "c_n_minus_1"},
}};
}  // namespace

Constant constant_from_name(std::string_view name) {
  for (const auto& [c, s] : kConstantNames) {
    if (s == name) return c;
  }
  throw UnknownConstant("unknown constant '" + std::string(name) + "'");
}

std::string_view constant_name(Constant c) {
  for (const auto& [k, s] : kConstantNames) {
    if (k == c) return s;
  }
  return "unknown";
}

void SpectralOperator::validate(int n) const {
  require_dim(n);
  switch (kind) {
    case Kind::cosine: require_admissible(n, alpha, Family::cosine); break;
    case Kind::sine: require_admissible(n, alpha, Family::sine); break;
    case Kind::smoothing_a:
      require_admissible(n, alpha, Family::cosine);
      require_admissible(n, beta, Family::cosine);
      break;
    case Kind::poisson:
      if (!(t >= 0.0 && t < 1.0)) throw std::invalid_argument("Poisson parameter t must lie in [0, 1)");
      break;
    case Kind::poisson_plus:
    case Kind::poisson_minus:
      if (!std::isfinite(mu) || !std::isfinite(nu)) throw std::invalid_argument("mu, nu must be finite");
      break;
    case Kind::funk: break;
  }
}

double SpectralOperator::multiplier(int n, int j) const {
  switch (kind) {
    case Kind::cosine: return m_mult(n, j, alpha);
    case Kind::sine: return q_mult(n, j, alpha);
    case Kind::poisson_plus: return qpm_mult(n, j, mu, nu, PoissonSide::plus);
    case Kind::poisson_minus: return qpm_mult(n, j, mu, nu, PoissonSide::minus);
    case Kind::smoothing_a: return a_mult(n, j, alpha, beta);
    case Kind::funk: return funk_mult(n, j);
    case Kind::poisson: return poisson_mult(j, t);
  }
  return 0.0;
}

std::vector<double> SpectralOperator::table(int n, int jmax) const {
  validate(n);
  std::vector<double> out(static_cast<std::size_t>(jmax) + 1);
  for (int j = 0; j <= jmax; ++j) out[j] = multiplier(n, j);
  return out;
}

std::string SpectralOperator::name() const {
  switch (kind) {
    case Kind::cosine: return "cosine";
    case Kind::sine: return "sine";
    case Kind::poisson_plus: return "q_plus";
    case Kind::poisson_minus: return "q_minus";
    case Kind::smoothing_a: return "smoothing_a";
    case Kind::funk: return "funk";
    case Kind::poisson: return "poisson";
  }
  return "unknown";
}

std::vector<double> cell_centred_grid(double lo, double hi, int count) {
  std::vector<double> out;
  out.reserve(count);
  const double h = (hi - lo) / count;
  for (int k = 0; k < count; ++k) out.push_back(lo + (k + 0.5) * h);
  return out;
}

namespace {

IdentityParams params_for(int n, std::optional<double> alpha, std::optional<double> beta, int jmax) {
  IdentityParams p;
  p.n = n;
  p.alpha = alpha;
  p.beta = beta;
  p.jmax = jmax;
  return p;
}

// First even degree >= jmax where the leading asymptotic term of m_{j,alpha}
// is expected to be accurate to 1% (the next-order correction is c1 / (j/2)).
int asymptotic_degree(int n, double alpha, int jmax) {
  const double a = 0.5 * (1.0 - alpha);
  const double b = 0.5 * (n - 1 + alpha);
  const double c1 = 0.5 * std::abs((a - b) * (a + b - 1.0));
  int j = std::max(2, jmax - jmax % 2);
  const int needed = static_cast<int>(std::ceil(2.0 * c1 / 0.01));
  if (j < needed) j = needed + needed % 2;
  return j;
}

}  // namespace

IdentityCheckResult check_identities(int n, const IdentityCheckOptions& options) {
  require_dim(n);
  IdentityCheckResult result;
  const int jmax = options.jmax;
  const auto& betas = options.beta_grid.empty() ? options.alpha_grid : options.beta_grid;
  auto skip = [&](std::string identity, IdentityParams p, std::string reason) {
    result.skipped.push_back({std::move(identity), std::move(p), std::move(reason)});
  };

  for (double alpha : options.alpha_grid) {
    const double dual = 2.0 - n - alpha;
    {
      auto p = params_for(n, alpha, std::nullopt, jmax);
      if (excluded(n, alpha, Family::cosine) || excluded(n, dual, Family::cosine)) {
        skip("inversion", p, "alpha or 2-n-alpha on the M^alpha pole lattice");
      } else {
        try {
          IdentityReport r{"inversion", p};
          for (int j = 0; j <= jmax; j += 2) r.accumulate(m_mult(n, j, alpha) * m_mult(n, j, dual), 1.0);
          r.finalize(options.tol);
          result.reports.push_back(std::move(r));
        } catch (const GammaPole& e) {
          skip("inversion", p, e.what());
        }
      }
    }
    {
      auto p = params_for(n, alpha, std::nullopt, jmax);
      const double q_order = alpha + n - 2;
      if (excluded(n, alpha, Family::cosine) || excluded(n, q_order, Family::sine)) {
        skip("semigroup", p, "alpha excluded for M^alpha or alpha+n-2 excluded for Q");
      } else {
        try {
          IdentityReport r{"semigroup", p};
          r.metric = ErrorMetric::relative;
          for (int j = 0; j <= jmax; j += 2) {
            r.accumulate(m_mult(n, j, alpha) * m_mult(n, j, 0.0), q_mult(n, j, q_order));
          }
          r.finalize(options.tol);
          result.reports.push_back(std::move(r));
        } catch (const GammaPole& e) {
          skip("semigroup", p, e.what());
        }
      }
    }
    for (double beta : betas) {
      if (beta == alpha) continue;
      auto p = params_for(n, alpha, beta, jmax);
      if (excluded(n, alpha, Family::cosine) || excluded(n, beta, Family::cosine)) {
        skip("factorization_m", p, "alpha or beta on the M^alpha pole lattice");
        continue;
      }
      try {
        IdentityReport r{"factorization_m", p};
        r.metric = ErrorMetric::relative;
        for (int j = 0; j <= jmax; j += 2) {
          r.accumulate(m_mult(n, j, beta) * a_mult(n, j, alpha, beta), m_mult(n, j, alpha));
        }
        r.finalize(options.tol);
        result.reports.push_back(std::move(r));
      } catch (const GammaPole& e) {
        skip("factorization_m", p, e.what());
      }
      try {
        IdentityReport r{"factorization_poisson", p};
        r.metric = ErrorMetric::relative;
        const auto f = a_factorization(alpha, beta);
        for (int j = 0; j <= jmax; ++j) {
          r.accumulate(qpm_mult(n, j, f.mu, f.nu_plus, PoissonSide::plus) *
                           qpm_mult(n, j, f.mu, f.nu_minus, PoissonSide::minus),
                       a_mult(n, j, alpha, beta));
        }
        r.finalize(options.tol);
        result.reports.push_back(std::move(r));
      } catch (const GammaPole& e) {
        skip("factorization_poisson", p, e.what());
      }
    }
  }

  // R_i^* R_i = c Q^{i-1}: for i = n-1 the dual transform of a hyperplane
  // function keyed by normals is the Funk transform, so the composite
  // multiplier is funk_mult^2; for i = 1 it is the even projection.
  for (int i : {1, n - 1}) {
    IdentityReport r{"radon_square"};
    r.params.n = n;
    r.params.i = i;
    r.params.jmax = jmax;
    const double c = constant(Constant::radon_square, n, i);
    r.accumulate(c * q_mult(n, 0, i - 1), 1.0);
    for (int j = 0; j <= jmax; j += 2) {
      const double composite = (i == 1) ? 1.0 : funk_mult(n, j) * funk_mult(n, j);
      r.accumulate(composite, c * q_mult(n, j, i - 1));
    }
    r.finalize(options.tol);
    result.reports.push_back(std::move(r));
    if (n == 2) break;
  }

  for (double alpha : options.asymptotic_alphas) {
    const int j = asymptotic_degree(n, alpha, jmax);
    auto p = params_for(n, alpha, std::nullopt, j);
    if (excluded(n, alpha, Family::cosine)) {
      skip("asymptotic", p, "alpha on the M^alpha pole lattice");
      continue;
    }
    IdentityReport r{"asymptotic", p};
    r.metric = ErrorMetric::absolute;
    r.accumulate(std::abs(m_mult(n, j, alpha)) * std::pow(0.5 * j, alpha + 0.5 * n - 1.0), 1.0);
    r.finalize(0.02);
    result.reports.push_back(std::move(r));
  }
  return result;
}

}  // namespace coslab
