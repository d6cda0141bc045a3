// Acceptance checks, one line per criterion:
//   criterion N: PASS|FAIL measured=<value> tol=<value> <description>
// With arguments, runs only the listed criterion numbers. Exit status is 0 iff
// every criterion that ran passed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "coslab/multipliers.hpp"
#include "coslab/s2_operators.hpp"
#include "coslab/s2_verify.hpp"
#include "coslab/starbody.hpp"
#include "coslab/suites.hpp"
#include "coslab/zonal.hpp"

using namespace coslab;

namespace {

const double pi = std::numbers::pi;
const double sqrt_pi = std::sqrt(pi);

struct Outcome {
  bool pass = true;
  double measured = 0.0;
  double tol = 0.0;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Worst metric over reports with the given identity names; all of them must pass.
Outcome from_reports(const std::vector<IdentityReport>& reports, const std::vector<std::string>& names, double tol) {
  Outcome o;
  o.tol = tol;
  int count = 0;
  for (const auto& r : reports) {
    if (std::find(names.begin(), names.end(), r.identity) == names.end()) continue;
    ++count;
    o.measured = std::max(o.measured, r.metric_value());
    o.pass = o.pass && r.pass && r.metric_value() <= tol;
  }
  if (count == 0) o.pass = false;
  o.detail = std::to_string(count) + " reports";
  return o;
}

std::vector<IdentityReport> multiplier_reports(const std::vector<int>& dims, int jmax, int alphas) {
  IdentityCheckOptions opts;
  opts.jmax = jmax;
  opts.alpha_grid = cell_centred_grid(-6.0, 6.0, alphas);
  std::vector<IdentityReport> all;
  for (int n : dims) {
    auto r = check_identities(n, opts).reports;
    all.insert(all.end(), r.begin(), r.end());
  }
  return all;
}

std::vector<IdentityReport> s2_groups(std::vector<std::string> groups) {
  S2SuiteOptions o;
  o.groups = std::move(groups);
  return verify_s2_suite(o);
}

Outcome criterion_1() {
  const auto t0 = Clock::now();
  auto o = from_reports(multiplier_reports({2, 3, 4, 5, 8}, 200, 40), {"inversion"}, 1e-10);
  const double t = seconds_since(t0);
  o.detail += ", " + sci(t) + " s";
  o.pass = o.pass && t < 1.0;
  return o;
}

Outcome criterion_2() { return from_reports(multiplier_reports({2, 3, 4, 5, 8}, 200, 40), {"semigroup"}, 1e-10); }

Outcome criterion_3() {
  return from_reports(multiplier_reports({2, 3, 4, 5, 8}, 100, 20), {"factorization_m", "factorization_poisson"},
                      1e-10);
}

Outcome criterion_4() {
  Outcome o;
  o.tol = 0.02;
  for (double alpha : {-1.0, 0.0, 0.5, 2.0}) {
    const double v = std::abs(m_mult(3, 200, alpha)) * std::pow(100.0, alpha + 0.5);
    o.measured = std::max(o.measured, std::abs(v - 1.0));
  }
  o.pass = o.measured <= o.tol;
  o.detail = "max |ratio - 1| at j = 200, n = 3";
  return o;
}

Outcome criterion_5() {
  const auto t0 = Clock::now();
  Outcome o;
  o.tol = 1e-6;
  const S2Grid grid = S2Grid::make(64, 128);
  const auto c = random_coeffs(16, 5, false);
  const GridFunction f = synthesize(c, grid);
  const std::vector<double> alphas{0.5, 1.5, 2.0, 2.5};
  for (double alpha : alphas) {
    const GridFunction direct = cosine_direct(f, alpha, 16);
    const GridFunction spectral = apply_spectral(f, SpectralOperator::cosine(alpha), 16);
    o.measured = std::max(o.measured, max_abs_diff(direct, spectral));
  }
  for (int n : {3, 4, 5}) {
    const auto z = random_zonal(n, 16, 11);
    for (double alpha : alphas) {
      const auto g = zonal_apply(z, SpectralOperator::cosine(alpha));
      for (int k = 0; k <= 20; ++k) {
        const double t = -1.0 + 0.1 * k;
        o.measured = std::max(o.measured, std::abs(zonal_cosine_direct(n, z, alpha, t, 16) - g(t)));
      }
    }
  }
  const double elapsed = seconds_since(t0);
  o.pass = o.measured <= o.tol && elapsed < 30.0;
  o.detail = "S^2 L = 16 on 64x128 and zonal n = 3,4,5, " + sci(elapsed) + " s";
  return o;
}

Outcome criterion_6() { return from_reports(s2_groups({"funk_factorization"}), {"funk_factorization"}, 1e-8); }

Outcome criterion_7() {
  const auto reps = s2_groups({"funk_inversion"});
  auto spec = from_reports(reps, {"funk_inversion_spectral"}, 1e-8);
  auto quad = from_reports(reps, {"funk_inversion_quadrature"}, 1e-6);
  Outcome o;
  o.pass = spec.pass && quad.pass;
  o.measured = quad.measured;
  o.tol = 1e-6;
  o.detail = "spectral " + sci(spec.measured) + " (tol 1e-8); measured is the quadrature path";
  return o;
}

Outcome criterion_8() {
  const auto reps = s2_groups({"koldobsky", "cosine_radon"});
  Outcome o;
  o.tol = 1e-6;
  int count = 0;
  for (const auto& r : reps) {
    const bool wanted = r.identity == "koldobsky_kr" ||
                        (r.identity == "cosine_radon" && (r.params.alpha == 0.5 || r.params.alpha == 1.0));
    if (!wanted) continue;
    ++count;
    o.measured = std::max(o.measured, r.metric_value());
    o.pass = o.pass && r.pass && r.metric_value() <= o.tol;
  }
  o.pass = o.pass && count == 3 && std::abs(constant(Constant::koldobsky_tilde, 3, 2) - 1.0 / sqrt_pi) < 1e-15;
  o.detail = "koldobsky_kr and cosine_radon at alpha = 0.5, 1 with c = 1/sqrt(pi)";
  return o;
}

Outcome criterion_9() {
  const auto reps = s2_groups({"right_inverse"});
  auto forms = from_reports(reps, {"right_inverse_forms"}, 1e-8);
  auto dual = from_reports(reps, {"right_inverse_dual"}, 1e-6);
  Outcome o;
  o.pass = forms.pass && dual.pass;
  o.measured = dual.measured;
  o.tol = 1e-6;
  o.detail = "forms pairwise " + sci(forms.measured) + " (tol 1e-8); measured is R_2^*(A f) - f";
  return o;
}

// R-dual_2^{-1} R_2 f against lambda_1 f with the constant as stated; the
// same residual against Gamma(1)/Gamma(1/2) f is reported alongside.
Outcome criterion_10() {
  Outcome o;
  o.tol = 1e-6;
  const double lambda1 = constant(Constant::lambda1, 3, 2);
  const double lambda2 = constant(Constant::lambda2, 3, 2);
  const S2Grid grid = S2Grid::make(48, 96);
  double with_lambda2 = 0.0;
  for (int s = 0; s < 5; ++s) {
    const GridFunction f = synthesize(random_coeffs(12, 7 + 1000003ULL * s, true), grid);
    const GridFunction lhs = apply_spectral(radon(f, 2).repr, SpectralOperator::cosine(-1.0), 12);
    for (std::size_t k = 0; k < grid.size(); ++k) {
      o.measured = std::max(o.measured, std::abs(lhs.values[k] - lambda1 * f.values[k]));
      with_lambda2 = std::max(with_lambda2, std::abs(lhs.values[k] - lambda2 * f.values[k]));
    }
  }
  o.pass = o.measured <= o.tol;
  char buf[160];
  std::snprintf(buf, sizeof buf, "lambda_1 = %.6g; residual with Gamma(1)/Gamma(1/2) = %.6g is %.3g", lambda1,
                lambda2, with_lambda2);
  o.detail = buf;
  return o;
}

Outcome criterion_11() {
  Outcome o;
  o.tol = 1e-10;
  int rows = 0;
  for (int n : {3, 5}) {
    const StarBody ball = make_body(n, {ShapeSpec::Kind::ball, 1.0, {}, 2.0});
    for (double alpha : ball_sweep_alphas(n)) {
      if (excluded(n, alpha, Family::body_class)) continue;
      ++rows;
      const auto v = classify_K_alpha(ball, alpha);
      const double want = std::tgamma(0.5 * (n - alpha)) / std::tgamma(0.5 * alpha);
      const auto expected = want > 0 ? ClassVerdict::Member::yes : ClassVerdict::Member::no;
      const double err = std::abs(v.min_value - want) / std::max(1.0, std::abs(want));
      o.measured = std::max(o.measured, err);
      o.pass = o.pass && v.member == expected;
    }
  }
  o.pass = o.pass && rows == 99 && o.measured <= o.tol;
  o.detail = std::to_string(rows) + " admissible orders, verdict signs and min_value";
  return o;
}

Outcome criterion_12() {
  Outcome o;
  o.tol = 1e-8;
  double ball_err = 0.0;
  for (double r : {0.5, 1.0, 2.0}) {
    const auto ib = intersection_body(make_body(3, {ShapeSpec::Kind::ball, r, {}, 2.0}));
    for (double v : ib.grid().values) ball_err = std::max(ball_err, std::abs(v - pi * r * r));
  }
  bool pairs = true;
  double pair_err = 0.0;
  const S2Grid grid = S2Grid::make(48, 96);
  for (std::uint64_t seed : {7, 8, 9}) {
    const StarBody L = body_from_grid(random_radial(grid, 12, seed));
    const auto rep = i_intersection_pair_check(i_intersection_body(L, 2), L, 2, 1e-6);
    pairs = pairs && rep.pass;
    pair_err = std::max(pair_err, rep.max_abs_err);
  }
  const auto chain = from_reports(s2_groups({"istar_chain"}), {"istar_chain"}, 1e-8);
  o.measured = chain.measured;
  o.pass = ball_err <= 1e-12 && pairs && chain.pass;
  char buf[160];
  std::snprintf(buf, sizeof buf, "IB(ball) %.3g (tol 1e-12), pair-check %.3g (tol 1e-6); measured is the i* chain", ball_err,
                pair_err);
  o.detail = buf;
  return o;
}

Outcome criterion_13() {
  Outcome o;
  o.tol = 1e-8;
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto f = random_nonnegative_zonal(3, 16, 7 + s);
    const auto g = zonal_apply(f, SpectralOperator::smoothing(0.5, -0.5));
    for (int k = 0; k <= 400; ++k) worst = std::min(worst, g(-1.0 + 0.005 * k));
  }
  o.measured = std::max(0.0, -worst);
  o.pass = worst >= -o.tol;
  o.detail = "-min of A_{0.5,-0.5} f over 100 nonnegative profiles";
  return o;
}

struct Criterion {
  int id;
  const char* description;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "multiplier inversion", criterion_1},
      {2, "semigroup", criterion_2},
      {3, "A_{alpha,beta} factorizations", criterion_3},
      {4, "large-degree asymptotics", criterion_4},
      {5, "cross-engine M^alpha", criterion_5},
      {6, "Funk factorization", criterion_6},
      {7, "Funk inversion", criterion_7},
      {8, "cosine/Radon chain, n = 3, i = 2", criterion_8},
      {9, "right-inverse forms", criterion_9},
      {10, "R-dual^{1-i} R_i f = lambda_1 f", criterion_10},
      {11, "unit-ball exclusion", criterion_11},
      {12, "intersection-body pipeline", criterion_12},
      {13, "positivity preservation", criterion_13},
  };
  std::vector<int> wanted;
  for (int a = 1; a < argc; ++a) wanted.push_back(std::stoi(argv[a]));

  bool all_pass = true;
  for (const auto& c : criteria) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("error: ") + e.what();
    }
    all_pass = all_pass && o.pass;
    std::printf("criterion %d: %s measured=%.3e tol=%.0e %s (%s)\n", c.id, o.pass ? "PASS" : "FAIL", o.measured,
                o.tol, c.description, o.detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
