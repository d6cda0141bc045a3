#include <doctest.h>

#include <cmath>
#include <numbers>

#include "coslab/errors.hpp"
#include "coslab/multipliers.hpp"
#include "coslab/parallel.hpp"
#include "coslab/s2_kernels.hpp"
#include "coslab/s2_operators.hpp"
#include "coslab/s2_verify.hpp"
#include "oracles.hpp"

using namespace coslab;

namespace {

const double sqrt_pi = std::sqrt(std::numbers::pi);

GridFunction x3_squared(const S2Grid& g) {
  return GridFunction::sample(g, [](const Vec3& p) { return p[2] * p[2]; });
}

}  // namespace

TEST_CASE("grid structure") {
  const auto g = S2Grid::make(12, 24);
  double total = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) total += g.weight(k);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Vec3 p = g.point(k), q = g.point(g.antipode(k));
    CHECK(std::abs(dot(p, p) - 1.0) < 1e-14);
    CHECK(std::abs(p[0] + q[0]) + std::abs(p[1] + q[1]) + std::abs(p[2] + q[2]) < 1e-14);
  }
  CHECK(g.max_band_limit() == 11);
  CHECK_THROWS_AS(S2Grid::make(12, 23), GridTooCoarse);
  CHECK_THROWS_AS(S2Grid::make(12, 20), GridTooCoarse);
}

TEST_CASE("zonal harmonics are sqrt(2j+1) P_j(cos theta)") {
  const auto g = S2Grid::make(10, 20);
  for (int j = 0; j <= 6; ++j) {
    HarmonicCoeffs c(6);
    c.at(j, 0) = 1.0;
    const auto f = synthesize(c, g);
    for (std::size_t k = 0; k < g.size(); k += 7) {
      CHECK(f.values[k] == doctest::Approx(std::sqrt(2.0 * j + 1.0) * oracle::legendre(j, g.point(k)[2])));
    }
  }
}

TEST_CASE("analysis inverts synthesis and satisfies Parseval") {
  const auto g = S2Grid::make(24, 48);
  const auto c = random_coeffs(16, 5, false);
  const auto f = synthesize(c, g);
  const auto back = analyze(f, 16);
  double err = 0.0;
  for (std::size_t k = 0; k < c.c.size(); ++k) err = std::max(err, std::abs(back.c[k] - c.c[k]));
  CHECK(err < 1e-13);
  CHECK(inner(f, f) == doctest::Approx(parseval_energy(c)).epsilon(1e-13));
  CHECK(effective_band_limit(analyze(f, 23)) == 16);
  CHECK_THROWS_AS(analyze(f, 24), GridTooCoarse);
}

TEST_CASE("OpenMP kernels agree with the serial references") {
  const auto g = S2Grid::make(20, 40);
  const auto c = random_coeffs(12, 9, false);
  const auto f = synthesize(c, g);
  const auto fr = synthesize_reference(c, g);
  CHECK(max_abs_diff(f, fr) < 1e-13);
  const auto a = analyze(f, 12), ar = analyze_reference(f, 12);
  for (std::size_t k = 0; k < a.c.size(); ++k) CHECK(std::abs(a.c[k] - ar.c[k]) < 1e-14);

  const HarmonicEvaluator eval(c);
  for (std::size_t k = 0; k < g.size(); k += 11) CHECK(eval(g.point(k)) == doctest::Approx(f.values[k]).epsilon(1e-12));

  const ZonalKernelRule rule{abs_power_rule(3, 0.5, 6), 14, 1.0};
  const auto parallel = integrate_zonal_kernel(eval, g, rule);
  const auto serial = integrate_zonal_kernel_reference(eval, g, rule);
  CHECK(parallel.values == serial.values);  // per-node sums are serial: bitwise equal
  set_thread_cap(1);
  const auto capped = integrate_zonal_kernel(eval, g, rule);
  set_thread_cap(0);
  CHECK(capped.values == serial.values);
}

TEST_CASE("direct operators on closed-form inputs") {
  const auto g = S2Grid::make(16, 32);
  SUBCASE("M^2 of the constant 1 is -2 sqrt(pi)") {
    const auto out = cosine_direct(GridFunction::constant(g, 1.0), 2.0);
    for (double v : out.values) CHECK(v == doctest::Approx(-2.0 * sqrt_pi).epsilon(1e-13));
  }
  SUBCASE("Funk transform of x3^2 is (1 - x3^2)/2") {
    const auto out = funk_direct(x3_squared(g));
    for (std::size_t k = 0; k < g.size(); ++k) {
      const double z = g.point(k)[2];
      CHECK(out.values[k] == doctest::Approx((1.0 - z * z) / 2.0).epsilon(1e-13));
    }
  }
  SUBCASE("Q^alpha of a constant is its degree-0 multiplier") {
    const auto out = sine_direct(GridFunction::constant(g, 1.0), 1.5);
    for (double v : out.values) CHECK(v == doctest::Approx(q_mult(3, 0, 1.5)).epsilon(1e-12));
  }
  SUBCASE("Poisson integral scales degree j by t^j") {
    HarmonicCoeffs c(4);
    c.at(3, 1) = 1.0;
    const auto f = synthesize(c, g);
    const auto out = poisson_direct(f, 0.6, 4);
    for (std::size_t k = 0; k < g.size(); ++k) CHECK(std::abs(out.values[k] - 0.216 * f.values[k]) < 1e-10);
  }
}

TEST_CASE("Radon transforms on S^2") {
  const auto g = S2Grid::make(16, 32);
  const auto f = synthesize(random_coeffs(8, 2, false), g);
  const auto r1 = radon(f, 1);
  CHECK(r1.kind == GrassmannFunctionS2::Kind::lines);
  CHECK(max_abs_diff(r1.repr, even_part(f)) == 0.0);
  const Vec3 u = g.point(37);
  CHECK(radon_r1(f, u) == doctest::Approx(even_part(f).values[37]).epsilon(1e-12));
  CHECK(radon(f, 2).perp().kind == GrassmannFunctionS2::Kind::lines);
  CHECK_THROWS_AS(dual_radon({GrassmannFunctionS2::Kind::planes, f}), OddInput);
  CHECK_THROWS(radon(f, 3));
}

TEST_CASE("window and lattice guards") {
  const auto f = GridFunction::constant(S2Grid::make(8, 16), 1.0);
  CHECK_THROWS_AS(cosine_direct(f, 0.05), QuadratureWindow);
  CHECK_THROWS_AS(cosine_direct(f, 3.5), QuadratureWindow);
  CHECK_THROWS_AS(cosine_direct(f, 1.0), ExcludedParameter);
  CHECK_THROWS_AS(sine_direct(f, 3.0), ExcludedParameter);
  CHECK_THROWS_AS(apply_spectral(f, SpectralOperator::cosine(3.0)), ExcludedParameter);
}

TEST_CASE("the three-point limit extrapolation error is a property of the scheme, not of the quadrature") {
  // Richardson over alpha in {0.4, 0.2, 0.1} applied to exact multipliers
  // leaves the same error as when applied to the direct quadrature.
  const auto g = S2Grid::make(24, 48);
  const auto c = random_coeffs(8, 21, true);
  const auto f = synthesize(c, g);
  auto richardson = [](double v4, double v2, double v1) {
    return 4.0 / 3.0 * (2.0 * v1 - v2) - 1.0 / 3.0 * (2.0 * v2 - v4);
  };
  const auto d4 = cosine_direct(f, 0.4, 8), d2 = cosine_direct(f, 0.2, 8), d1 = cosine_direct(f, 0.1, 8);
  HarmonicCoeffs spec(8);
  for (int j = 0; j <= 8; j += 2) {
    const double m = richardson(m_mult(3, j, 0.4), m_mult(3, j, 0.2), m_mult(3, j, 0.1));
    for (int k = -j; k <= j; ++k) spec.at(j, k) = m * c.at(j, k);
  }
  const auto spectral = synthesize(spec, g);
  const auto target = funk_direct(f, 8);
  double scheme_err = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double direct = richardson(d4.values[k], d2.values[k], d1.values[k]);
    CHECK(std::abs(direct - spectral.values[k]) < 1e-11);
    scheme_err = std::max(scheme_err, std::abs(direct - sqrt_pi * target.values[k]));
  }
  CHECK(scheme_err > 1e-3);
}

TEST_CASE("S^2 identity groups run individually") {
  S2SuiteOptions o;
  o.samples = 2;
  o.groups = {"duality", "funk_factorization", "funk_inversion", "right_inverse", "dual_lemma", "istar_chain"};
  const auto reps = verify_s2_suite(o);
  CHECK(reps.size() == 11);
  for (const auto& r : reps) {
    INFO(r.identity << " err=" << r.metric_value());
    CHECK(r.pass);
  }
  o.groups = {"no_such_group"};
  CHECK_THROWS_AS(verify_s2_suite(o), std::invalid_argument);
}
