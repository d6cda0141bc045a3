#include "coslab/s2_verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "coslab/multipliers.hpp"
#include "coslab/s2_operators.hpp"
#include "coslab/starbody.hpp"

namespace coslab {

HarmonicCoeffs random_coeffs(int L, std::uint64_t seed, bool even) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  HarmonicCoeffs c(L);
  for (int j = 0; j <= L; ++j) {
    for (int k = -j; k <= j; ++k) {
      const double v = u(rng) / ((1.0 + j) * (1.0 + j));
      c.at(j, k) = (even && j % 2 == 1) ? 0.0 : v;
    }
  }
  return c;
}

namespace {

const double sqrt_pi = std::sqrt(std::numbers::pi);

GridFunction scaled(GridFunction f, double c) {
  for (double& v : f.values) v *= c;
  return f;
}

GridFunction combine(const GridFunction& a, double ca, const GridFunction& b, double cb) {
  GridFunction out = a;
  for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] = ca * a.values[k] + cb * b.values[k];
  return out;
}

// Spectral inverse on even functions: divides even degrees, zeroes odd ones.
HarmonicCoeffs apply_inverse(const HarmonicCoeffs& c, const SpectralOperator& op) {
  op.validate(3);
  HarmonicCoeffs out(c.L);
  for (int j = 0; j <= c.L; j += 2) {
    const double m = op.multiplier(3, j);
    for (int k = -j; k <= j; ++k) out.at(j, k) = c.at(j, k) / m;
  }
  return out;
}

// Value at alpha = 0 of the interpolating polynomial through (alphas[k], vals[k]), node-wise (Neville).
GridFunction extrapolate_to_zero(const std::vector<double>& alphas, std::vector<GridFunction> vals) {
  const std::size_t n = alphas.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      const double lo = alphas[i], hi = alphas[i + m];
      vals[i] = combine(vals[i], hi / (hi - lo), vals[i + 1], -lo / (hi - lo));
    }
  }
  return vals[0];
}

double max_coeff_diff(const HarmonicCoeffs& a, const HarmonicCoeffs& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.c.size(); ++k) m = std::max(m, std::abs(a.c[k] - b.c[k]));
  return m;
}

class Suite {
public:
  explicit Suite(const S2SuiteOptions& o) : opts_(o), grid_(S2Grid::make(o.n_theta, o.n_phi)) {}

  std::vector<IdentityReport> run() {
    using Group = void (Suite::*)();
    static const std::pair<const char*, Group> groups[] = {
        {"duality", &Suite::duality},
        {"funk_factorization", &Suite::funk_factorization},
        {"koldobsky", &Suite::koldobsky},
        {"cosine_radon", &Suite::cosine_radon},
        {"range_lemma", &Suite::range_lemma},
        {"right_inverse", &Suite::right_inverse},
        {"dual_lemma", &Suite::dual_lemma},
        {"radon_inversion", &Suite::radon_inversion},
        {"funk_inversion", &Suite::funk_inversion},
        {"cosine_limit", &Suite::cosine_limit},
        {"cross_engine", &Suite::cross_engine},
        {"evenness", &Suite::evenness},
        {"istar_chain", &Suite::istar_chain},
    };
    for (const auto& name : opts_.groups) {
      const auto& all = s2_suite_groups();
      if (std::find(all.begin(), all.end(), name) == all.end()) {
        throw std::invalid_argument("unknown S^2 identity group '" + name + "'");
      }
    }
    for (const auto& [name, fn] : groups) {
      if (opts_.groups.empty() ||
          std::find(opts_.groups.begin(), opts_.groups.end(), name) != opts_.groups.end()) {
        (this->*fn)();
      }
    }
    return std::move(reports_);
  }

private:
  IdentityReport report(std::string name, std::optional<int> i = {}, std::optional<double> alpha = {}) {
    IdentityReport r{std::move(name)};
    r.params.n = 3;
    r.params.i = i;
    r.params.alpha = alpha;
    r.params.band_limit = opts_.band_limit;
    r.params.seed = opts_.seed;
    r.metric = ErrorMetric::absolute;
    return r;
  }

  void finish(IdentityReport r, double tol, std::string note = {}) {
    r.note = std::move(note);
    r.finalize(tol);
    reports_.push_back(std::move(r));
  }

  // Random even band-limited function number s.
  HarmonicCoeffs coeffs(int s, bool even = true) const {
    return random_coeffs(opts_.band_limit, opts_.seed + 1000003ULL * s + (even ? 0 : 17), even);
  }
  GridFunction sample(int s, bool even = true) const { return synthesize(coeffs(s, even), grid_); }
  GridFunction synth(const HarmonicCoeffs& c) const { return synthesize(c, grid_); }

  void for_samples(const std::function<void(int)>& body) const {
    for (int s = 0; s < opts_.samples; ++s) body(s);
  }

  void duality() {
    for (int i : {1, 2}) {
      auto r = report("duality", i);
      for_samples([&](int s) {
        const GridFunction f = sample(s, false);
        const GridFunction phi = synth(coeffs(s + 500));
        const auto rf = radon(f, i);
        const GrassmannFunctionS2 g{rf.kind, phi};
        r.accumulate(inner(rf.repr, phi), inner(f, dual_radon(g)));
      });
      finish(std::move(r), opts_.tol_spectral, "(R_i f, phi) = (f, R_i^* phi), f with odd part");
    }
  }

  void funk_factorization() {
    for (int i : {1, 2}) {
      auto r = report("funk_factorization", i);
      for_samples([&](int s) {
        const GridFunction f = sample(s);
        const GridFunction lhs = funk_direct(f);
        const GridFunction rhs = dual_radon(radon(f, 3 - i).perp());
        r.accumulate(max_abs_diff(lhs, rhs), 0.0);
      });
      finish(std::move(r), opts_.tol_spectral, "M f = R_i^* R_{n-i,perp} f");
    }
  }

  void koldobsky() {
    auto r = report("koldobsky_kr", 2, -1.0);
    const double c = constant(Constant::koldobsky_tilde, 3, 2);
    for_samples([&](int s) {
      const auto cf = coeffs(s);
      const GridFunction lhs = funk_direct(synth(apply_spectral(cf, SpectralOperator::cosine(-1.0))));
      const GridFunction rhs = scaled(radon(synth(cf), 1).perp().repr, c);
      r.accumulate(max_abs_diff(lhs, rhs), 0.0);
    });
    finish(std::move(r), opts_.tol_quadrature, "R_2 M^{-1} f = c R_{1,perp} f, c = 1/sqrt(pi)");
  }

  // R_2 M^{a-1} f = c R_{1,perp}^{a} f; alpha in the report is the R_1 order a.
  void cosine_radon() {
    const double c = constant(Constant::cosine_radon, 3, 2);
    for (double a : {0.5, 1.0, 1.5}) {
      auto r = report("cosine_radon", 2, a);
      for_samples([&](int s) {
        const GridFunction f = sample(s);
        const GridFunction mf = a - 1.0 >= kDirectAlphaMin
                                    ? cosine_direct(f, a - 1.0, opts_.band_limit)
                                    : synth(apply_spectral(coeffs(s), SpectralOperator::cosine(a - 1.0)));
        const GridFunction lhs = funk_direct(mf, opts_.band_limit);
        const GridFunction rhs = scaled(ri_alpha_direct(f, 1, a, opts_.band_limit).perp().repr, c);
        r.accumulate(max_abs_diff(lhs, rhs), 0.0);
      });
      finish(std::move(r), opts_.tol_quadrature, "R_2 M^{alpha-1} f = (1/sqrt(pi)) R^{alpha}_{1,perp} f");
    }
  }

  void range_lemma() {
    const double back = constant(Constant::range_backward, 3, 2);
    const double fwd = constant(Constant::range_forward, 3, 2);
    for (double alpha : {0.5, 1.5, 2.5}) {
      auto r = report("range_coi", 2, alpha);
      auto rinv = report("range_coi_inverse", 2, alpha);
      rinv.metric = ErrorMetric::mixed;
      for_samples([&](int s) {
        const auto cf = coeffs(s);
        // f_1 = pi^{(1-i)/2} sigma_{i-1}/2 M^{1-i} M^{alpha+i+1-n} f
        HarmonicCoeffs f1 = apply_spectral(apply_spectral(cf, SpectralOperator::cosine(alpha)),
                                           SpectralOperator::cosine(-1.0));
        for (double& v : f1.c) v *= back;
        const GridFunction lhs = ri_alpha_direct(synth(cf), 2, alpha).repr;
        const GridFunction rhs = radon(synth(f1), 2).repr;
        r.accumulate(max_abs_diff(lhs, rhs), 0.0);
        // f = 2 pi^{(i-1)/2}/sigma_{i-1} M^{1-n+i} M^{1-alpha-i} f_1
        HarmonicCoeffs back_f = apply_spectral(apply_spectral(f1, SpectralOperator::cosine(-1.0 - alpha)),
                                               SpectralOperator::cosine(0.0));
        for (double& v : back_f.c) v *= fwd;
        rinv.accumulate(max_coeff_diff(back_f, cf), 0.0);
      });
      finish(std::move(r), opts_.tol_quadrature, "R_2^alpha f = R_2 f_1");
      finish(std::move(rinv), opts_.tol_spectral, "f recovered from f_1");
    }
  }

  void right_inverse() {
    auto forms = report("right_inverse_forms", 2);
    auto dual = report("right_inverse_dual", 2);
    const double c1 = constant(Constant::right_inverse_funk, 3, 2);
    const double c2 = constant(Constant::right_inverse_radon, 3, 2);
    const double c3 = constant(Constant::right_inverse_sine, 3, 2);
    for_samples([&](int s) {
      const auto cf = coeffs(s);
      // (A f)(xi) = c1 (R_{1,perp} M^{-1} f)(xi)
      const GridFunction a1 =
          scaled(radon(synth(apply_spectral(cf, SpectralOperator::cosine(-1.0))), 1).perp().repr, c1);
      // = c2 (R_2^{-1} f)(xi); R_2^alpha on planes keyed by normals has the M^alpha multiplier
      const GridFunction a2 = scaled(synth(apply_spectral(cf, SpectralOperator::cosine(-1.0))), c2);
      // = c3 (R_2 (Q^1)^{-1} f)(xi)
      const GridFunction a3 = scaled(radon(synth(apply_inverse(cf, SpectralOperator::sine(1.0))), 2).repr, c3);
      forms.accumulate(max_abs_diff(a1, a2), 0.0);
      forms.accumulate(max_abs_diff(a1, a3), 0.0);
      forms.accumulate(max_abs_diff(a2, a3), 0.0);
      const GridFunction back = dual_radon({GrassmannFunctionS2::Kind::planes, a3});
      dual.accumulate(max_abs_diff(back, synth(cf)), 0.0);
    });
    finish(std::move(forms), opts_.tol_spectral, "three forms of A agree pairwise");
    finish(std::move(dual), opts_.tol_quadrature, "R_2^*(A f) = f");
  }

  void dual_lemma() {
    for (int i : {1, 2}) {
      auto r = report("dual_lemma", i);
      const double c = constant(Constant::dual_tilde, 3, i);
      for_samples([&](int s) {
        const GridFunction phi = sample(s);
        const GrassmannFunctionS2 g{i == 1 ? GrassmannFunctionS2::Kind::lines : GrassmannFunctionS2::Kind::planes,
                                    phi};
        const GridFunction lhs = apply_spectral(dual_radon(g), SpectralOperator::cosine(1.0 - i), opts_.band_limit);
        const GridFunction rhs = scaled(dual_radon(g.perp()), c);
        r.accumulate(max_abs_diff(lhs, rhs), 0.0);
      });
      finish(std::move(r), opts_.tol_quadrature, "M^{1-i} R_i^* phi = c R_{n-i}^* phi^perp");
    }
  }

  void radon_inversion() {
    // With the probability measure on G_{3,2} the constant of
    // R-dual^{alpha} R_i = lambda Q^{alpha+i-1} is Gamma((n-1)/2)/Gamma((n-i)/2).
    const double lambda = constant(Constant::lambda2, 3, 2);
    auto r = report("radon_inversion", 2, -1.0);
    for_samples([&](int s) {
      const GridFunction f = sample(s);
      const GridFunction rf = radon(f, 2).repr;
      const GridFunction lhs = apply_spectral(rf, SpectralOperator::cosine(-1.0), opts_.band_limit);
      r.accumulate(max_abs_diff(lhs, scaled(f, lambda)), 0.0);
    });
    finish(std::move(r), opts_.tol_quadrature,
           "R-dual_2^{-1} R_2 f = lambda f, lambda = Gamma(1)/Gamma(1/2) for normalized measures");
    for (double alpha : {0.5, 1.5}) {
      auto ra = report("radon_dual_alpha", 2, alpha);
      for_samples([&](int s) {
        const GridFunction f = sample(s);
        const GridFunction lhs = cosine_direct(radon(f, 2).repr, alpha, opts_.band_limit);
        const GridFunction rhs = scaled(sine_direct(f, alpha + 1.0, opts_.band_limit), lambda);
        ra.accumulate(max_abs_diff(lhs, rhs), 0.0);
      });
      finish(std::move(ra), opts_.tol_quadrature, "R-dual_2^alpha R_2 f = lambda Q^{alpha+1} f, both direct");
    }
  }

  void funk_inversion() {
    auto spec = report("funk_inversion_spectral");
    auto quad = report("funk_inversion_quadrature");
    for_samples([&](int s) {
      const auto cf = coeffs(s);
      HarmonicCoeffs back = apply_spectral(apply_spectral(cf, SpectralOperator::funk()), SpectralOperator::cosine(-1.0));
      for (double& v : back.c) v *= sqrt_pi;
      spec.accumulate(max_coeff_diff(back, cf), 0.0);

      const GridFunction f = synth(cf);
      HarmonicCoeffs q = apply_spectral(analyze(funk_direct(f), opts_.band_limit), SpectralOperator::cosine(-1.0));
      for (double& v : q.c) v *= sqrt_pi;
      quad.accumulate(max_abs_diff(synth(q), f), 0.0);
    });
    finish(std::move(spec), opts_.tol_spectral, "f = sqrt(pi) M^{-1} M f");
    finish(std::move(quad), opts_.tol_quadrature, "through great-circle quadrature");
  }

  void cosine_limit() {
    auto r = report("cosine_limit");
    auto ext = report("cosine_limit_extended");
    const std::vector<double> alphas{0.4, 0.35, 0.3, 0.25, 0.2, 0.15, 0.1};
    for_samples([&](int s) {
      const GridFunction f = sample(s);
      const GridFunction target = scaled(funk_direct(f, opts_.band_limit), sqrt_pi);
      std::vector<GridFunction> vals;
      for (double a : alphas) vals.push_back(cosine_direct(f, a, opts_.band_limit));
      // Two Richardson levels for step ratio 2 over {0.4, 0.2, 0.1}.
      const GridFunction& a4 = vals[0];
      const GridFunction& a2 = vals[4];
      const GridFunction& a1 = vals[6];
      const GridFunction r1 = combine(a2, 2.0, a4, -1.0);
      const GridFunction r2 = combine(a1, 2.0, a2, -1.0);
      r.accumulate(max_abs_diff(combine(r2, 4.0 / 3.0, r1, -1.0 / 3.0), target), 0.0);
      ext.accumulate(max_abs_diff(extrapolate_to_zero(alphas, vals), target), 0.0);
    });
    finish(std::move(r), opts_.tol_limit, "M^alpha f -> sqrt(pi) M f as alpha -> 0, Richardson over {0.4, 0.2, 0.1}");
    finish(std::move(ext), opts_.tol_limit, "same limit, degree-6 polynomial extrapolation over alpha in [0.1, 0.4]");
  }

  void cross_engine() {
    for (double alpha : {0.5, 1.5, 2.0, 2.5}) {
      auto r = report("cosine_cross_engine", {}, alpha);
      for_samples([&](int s) {
        const GridFunction f = sample(s, false);
        const GridFunction direct = cosine_direct(f, alpha, opts_.band_limit);
        const GridFunction spectral = apply_spectral(f, SpectralOperator::cosine(alpha), opts_.band_limit);
        r.accumulate(max_abs_diff(direct, spectral), 0.0);
      });
      finish(std::move(r), opts_.tol_quadrature);
    }
    for (double alpha : {0.5, 1.5, 2.5}) {
      auto r = report("sine_cross_engine", {}, alpha);
      for_samples([&](int s) {
        const GridFunction f = sample(s);
        r.accumulate(max_abs_diff(sine_direct(f, alpha, opts_.band_limit),
                                  apply_spectral(f, SpectralOperator::sine(alpha), opts_.band_limit)),
                     0.0);
      });
      finish(std::move(r), opts_.tol_quadrature);
    }
    auto p = report("poisson_cross_engine");
    for_samples([&](int s) {
      const GridFunction f = sample(s, false);
      p.accumulate(max_abs_diff(poisson_direct(f, 0.5, opts_.band_limit),
                                apply_spectral(f, SpectralOperator::poisson(0.5), opts_.band_limit)),
                   0.0);
    });
    finish(std::move(p), opts_.tol_quadrature, "t = 0.5");
  }

  void evenness() {
    auto r = report("evenness");
    const SpectralOperator ops[] = {SpectralOperator::cosine(0.5), SpectralOperator::cosine(-1.0),
                                    SpectralOperator::sine(1.0), SpectralOperator::funk(),
                                    SpectralOperator::smoothing(0.5, -0.5)};
    for_samples([&](int s) {
      const GridFunction f = sample(s);
      for (const auto& op : ops) r.accumulate(odd_energy_fraction(apply_spectral(f, op, opts_.band_limit)), 0.0);
      r.accumulate(odd_energy_fraction(cosine_direct(f, 1.5, opts_.band_limit)), 0.0);
    });
    finish(std::move(r), 1e-10, "odd energy fraction of outputs on even inputs");
  }

  void istar_chain() {
    auto r = report("istar_chain", 1);
    for_samples([&](int s) {
      HarmonicCoeffs c = coeffs(s);
      for (double& v : c.c) v *= 0.2;
      c.at(0, 0) = 1.0;
      const auto sub = istar_chain_check(synth(c), opts_.tol_spectral);
      r.accumulate(sub.max_abs_err, 0.0);
    });
    finish(std::move(r), opts_.tol_spectral, "R_1 rho_K = R_{2,perp} mu for rho_K = R_2^* nu");
  }

  S2SuiteOptions opts_;
  S2Grid grid_;
  std::vector<IdentityReport> reports_;
};

}  // namespace

const std::vector<std::string>& s2_suite_groups() {
  static const std::vector<std::string> names{
      "duality",         "funk_factorization", "koldobsky",      "cosine_radon", "range_lemma",
      "right_inverse",   "dual_lemma",         "radon_inversion", "funk_inversion", "cosine_limit",
      "cross_engine",    "evenness",           "istar_chain"};
  return names;
}

std::vector<IdentityReport> verify_s2_suite(const S2SuiteOptions& opts) {
  auto reports = Suite(opts).run();
  sort_reports(reports);
  return reports;
}

}  // namespace coslab
