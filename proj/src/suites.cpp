#include "coslab/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "coslab/errors.hpp"
#include "coslab/multipliers.hpp"
#include "coslab/s2_harmonics.hpp"
#include "coslab/s2_verify.hpp"
#include "coslab/starbody.hpp"

namespace coslab {

ZonalFunction random_zonal(int n, int J, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ZonalFunction f{n, std::vector<double>(static_cast<std::size_t>(J) + 1)};
  for (int j = 0; j <= J; ++j) f.coeffs[j] = u(rng) / ((1.0 + j) * (1.0 + j));
  return f;
}

ZonalFunction random_nonnegative_zonal(int n, int J, std::uint64_t seed) {
  const ZonalFunction p = random_zonal(n, J / 2, seed);
  return zonal_project(n, [&](double t) { return p(t) * p(t); }, J);
}

GridFunction random_radial(const S2Grid& grid, int L, std::uint64_t seed, double amplitude) {
  GridFunction g = synthesize(random_coeffs(L, seed, true), grid);
  const double scale = amplitude / std::max(max_abs(g), 1e-300);
  for (double& v : g.values) v = 1.0 + scale * v;
  return g;
}

std::vector<double> ball_sweep_alphas(int n) {
  std::vector<double> out;
  if (n == 3) {
    for (int k = 0; k < 59; ++k) out.push_back(-3.0 + k * (5.9 / 58.0));
  } else {
    for (int k = 0; k < 40; ++k) out.push_back(-2.95 + 0.3 * k);
  }
  return out;
}

namespace {

IdentityReport make_report(std::string name, int n, std::optional<double> alpha = {}) {
  IdentityReport r{std::move(name)};
  r.params.n = n;
  r.params.alpha = alpha;
  r.metric = ErrorMetric::absolute;
  return r;
}

std::vector<double> equispaced(double lo, double hi, int count) {
  std::vector<double> t(count);
  for (int k = 0; k < count; ++k) t[k] = lo + (hi - lo) * k / (count - 1);
  return t;
}

}  // namespace

std::vector<IdentityReport> verify_zonal_suite(const ZonalSuiteOptions& opts) {
  std::vector<IdentityReport> out;
  const int J = opts.degree;
  const std::vector<double> t0 = equispaced(-1.0, 1.0, 21);

  for (int n : opts.dims) {
    auto rt = make_report("zonal_round_trip", n);
    rt.params.jmax = J;
    const QuadratureRule rule = gauss_jacobi_rule(n, J + 1);
    for (int s = 0; s < opts.samples; ++s) {
      const ZonalFunction f = random_zonal(n, J, opts.seed + 7919ULL * s);
      const auto samples = zonal_synth(f, rule.nodes);
      const ZonalFunction back = zonal_analyze(n, rule, samples, J);
      rt.accumulate(back.coeffs, f.coeffs);
    }
    rt.finalize(opts.tol_exact);
    out.push_back(std::move(rt));

    for (double alpha : {0.5, 1.5, 2.0, 2.5}) {
      auto r = make_report("zonal_cosine_cross_engine", n, alpha);
      r.params.jmax = J;
      for (int s = 0; s < opts.samples; ++s) {
        const ZonalFunction f = random_zonal(n, J, opts.seed + 7919ULL * s);
        const ZonalFunction g = zonal_apply(f, SpectralOperator::cosine(alpha));
        for (double t : t0) r.accumulate(zonal_cosine_direct(n, f, alpha, t, J), g(t));
      }
      r.finalize(opts.tol_quadrature);
      r.note = "21 equispaced t0 in [-1, 1]";
      out.push_back(std::move(r));
    }
  }

  {
    const int n = 3;
    const double alpha = 0.5, beta = -0.5;
    auto r = make_report("zonal_positivity", n, alpha);
    r.params.beta = beta;
    r.params.jmax = J;
    r.params.seed = opts.seed;
    const std::vector<double> t = equispaced(-1.0, 1.0, 201);
    double worst = 0.0;
    for (int s = 0; s < opts.positivity_samples; ++s) {
      const ZonalFunction f = random_nonnegative_zonal(n, J, opts.seed + 104729ULL * s);
      const auto g = zonal_synth(zonal_apply(f, SpectralOperator::smoothing(alpha, beta)), t);
      const double lo = *std::min_element(g.begin(), g.end());
      worst = std::min(worst, lo);
    }
    // Only the negative part counts as an error.
    r.accumulate(-worst, 0.0);
    std::ostringstream note;
    note << opts.positivity_samples << " nonnegative profiles, min over 201 points of A f = " << worst;
    r.note = note.str();
    r.finalize(opts.tol_positivity);
    out.push_back(std::move(r));
  }

  sort_reports(out);
  return out;
}

std::vector<IdentityReport> verify_starbody_suite(const StarbodySuiteOptions& opts) {
  std::vector<IdentityReport> out;
  const Resolution res{opts.n_theta, opts.n_phi, 32, false};
  const S2Grid grid = S2Grid::make(opts.n_theta, opts.n_phi);

  for (int n : {3, 5}) {
    auto r = make_report("ball_exclusion", n);
    r.metric = ErrorMetric::mixed;
    const StarBody ball = make_body(n, {ShapeSpec::Kind::ball, 1.0, {}, 2.0}, res);
    int mismatched = 0, checked = 0;
    for (double alpha : ball_sweep_alphas(n)) {
      if (excluded(n, alpha, Family::body_class)) continue;
      const ClassVerdict v = classify_K_alpha(ball, alpha);
      const double expected = ball_class_sign(n, alpha);
      const auto want = expected > 0.0 ? ClassVerdict::Member::yes : ClassVerdict::Member::no;
      if (v.member != want) ++mismatched;
      ++checked;
      r.accumulate(v.min_value, expected);
    }
    std::ostringstream note;
    note << checked << " orders, " << mismatched << " verdicts disagree with sign(Gamma((n-alpha)/2)/Gamma(alpha/2))";
    r.note = note.str();
    r.finalize(opts.tol_exact);
    if (mismatched > 0) r.pass = false;
    out.push_back(std::move(r));
  }

  {
    auto r = make_report("intersection_body_ball", 3);
    for (double radius : {0.5, 1.0, 2.0}) {
      const StarBody ib = intersection_body(make_body(3, {ShapeSpec::Kind::ball, radius, {}, 2.0}, res));
      for (double v : ib.grid().values) r.accumulate(v, std::numbers::pi * radius * radius);
    }
    r.note = "rho = pi r^2 for r in {0.5, 1, 2}";
    r.finalize(1e-12);
    out.push_back(std::move(r));
  }

  for (int b = 0; b < opts.bodies; ++b) {
    const std::uint64_t seed = opts.seed + 31ULL * b;
    const StarBody L = body_from_grid(random_radial(grid, opts.band_limit, seed), "random");

    IdentityReport pair = i_intersection_pair_check(i_intersection_body(L, 2), L, 2, opts.tol);
    pair.params.seed = seed;
    pair.params.band_limit = opts.band_limit;
    out.push_back(std::move(pair));

    auto cls = make_report("intersection_body_class", 3, 1.0);
    cls.params.seed = seed;
    const ClassVerdict v = classify_K_alpha(intersection_body(L), 1.0);
    cls.accumulate(v.member == ClassVerdict::Member::yes ? 0.0 : 1.0, 0.0);
    cls.note = "IB(L) classified in K_{1,3}: " + to_string(v.member);
    cls.finalize(0.5);
    out.push_back(std::move(cls));
  }

  {
    IdentityReport chain{"istar_chain"};
    for (int s = 0; s < opts.bodies; ++s) {
      HarmonicCoeffs c = random_coeffs(opts.band_limit, opts.seed + 1000003ULL * s, true);
      for (double& v : c.c) v *= 0.2;
      c.at(0, 0) = 1.0;
      const IdentityReport one = istar_chain_check(synthesize(c, grid), 1e-8);
      if (s == 0) chain = one;
      chain.accumulate(one.max_abs_err, 0.0);
    }
    chain.finalize(1e-8);
    out.push_back(std::move(chain));
  }

  sort_reports(out);
  return out;
}

}  // namespace coslab
