#include <doctest.h>

#include <cmath>
#include <numeric>

#include "coslab/quadrature.hpp"
#include "oracles.hpp"

using namespace coslab;

namespace {

double moment(const QuadratureRule& r, int k) {
  double s = 0.0;
  for (std::size_t a = 0; a < r.size(); ++a) s += r.weights[a] * std::pow(r.nodes[a], k);
  return s;
}

double weight_sum(const QuadratureRule& r) { return std::accumulate(r.weights.begin(), r.weights.end(), 0.0); }

}  // namespace

TEST_CASE("Gauss-Legendre rule") {
  const auto r2 = gauss_legendre_rule(2);
  CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)));
  CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)));
  const auto r = gauss_legendre_rule(6);
  CHECK(weight_sum(r) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(moment(r, 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(moment(r, 4) == doctest::Approx(1.0 / 5.0).epsilon(1e-14));
  CHECK(moment(r, 10) == doctest::Approx(1.0 / 11.0).epsilon(1e-14));
  CHECK(std::abs(moment(r, 7)) < 1e-15);
  for (std::size_t a = 1; a < r.size(); ++a) CHECK(r.nodes[a] > r.nodes[a - 1]);
}

TEST_CASE("Gauss-Jacobi rule reproduces Beta-function moments") {
  for (double a : {-0.5, 0.0, 1.5}) {
    for (double b : {-0.7, 0.5, 3.0}) {
      const auto r = jacobi_rule(8, a, b);
      CHECK(weight_sum(r) == doctest::Approx(1.0).epsilon(1e-14));
      // E[(1+x)/2] under (1-x)^a (1+x)^b is (b+1)/(a+b+2).
      double m1 = 0.0;
      for (std::size_t k = 0; k < r.size(); ++k) m1 += r.weights[k] * 0.5 * (1.0 + r.nodes[k]);
      CHECK(m1 == doctest::Approx((b + 1.0) / (a + b + 2.0)).epsilon(1e-13));
    }
  }
}

TEST_CASE("sphere-induced rule gives the moments of theta.u") {
  // E t^2 = 1/n and E t^4 = 3/(n(n+2)) for theta uniform on S^{n-1}.
  for (int n : {2, 3, 4, 7}) {
    const auto r = gauss_jacobi_rule(n, 5);
    CHECK(moment(r, 2) == doctest::Approx(1.0 / n).epsilon(1e-14));
    CHECK(moment(r, 4) == doctest::Approx(3.0 / (n * (n + 2.0))).epsilon(1e-14));
  }
}

TEST_CASE("abs_power_rule integrates polynomials against |t|^{alpha-1}") {
  for (double alpha : {0.1, 0.5, 1.7, 2.5}) {
    const int N = 5;
    const auto r = abs_power_rule(3, alpha, N);
    CHECK(r.size() == 2 * N);
    CHECK(weight_sum(r) == doctest::Approx(1.0).epsilon(1e-14));
    // For n = 3 the weight is |t|^{alpha-1} on [-1, 1]: E t^{2k} = alpha / (alpha + 2k).
    for (int k = 1; 2 * k <= 4 * N - 1; ++k) {
      CHECK(moment(r, 2 * k) == doctest::Approx(alpha / (alpha + 2.0 * k)).epsilon(1e-12));
    }
    CHECK(std::abs(moment(r, 3)) < 1e-15);
    CHECK(abs_power_mass(3, alpha) == doctest::Approx(1.0 / alpha).epsilon(1e-13));
  }
  // n = 5: weight |t|^{alpha-1} (1-t^2)
  const double alpha = 1.5;
  const auto r = abs_power_rule(5, alpha, 4);
  auto w = [&](double t) { return std::pow(t, alpha - 1.0) * (1.0 - t * t); };
  const double want = oracle::simpson([&](double t) { return w(t) * t * t; }, 0.0, 1.0, 200000) /
                      oracle::simpson(w, 0.0, 1.0, 200000);
  CHECK(moment(r, 2) == doctest::Approx(want).epsilon(1e-6));
}

TEST_CASE("sine_power_rule and its mass") {
  // n = 3, p = 2: weight 1 - t^2 on [-1, 1].
  const auto r = sine_power_rule(3, 2.0, 4);
  CHECK(weight_sum(r) == doctest::Approx(1.0));
  CHECK(moment(r, 2) == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(sine_power_mass(3, 2.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  // p = -1.5 (a singular kernel): mass = int_0^1 (1-t^2)^{-3/4} dt = B(1/2, 1/4)/2.
  const double beta = std::tgamma(0.5) * std::tgamma(0.25) / std::tgamma(0.75);
  CHECK(sine_power_mass(3, -1.5) == doctest::Approx(0.5 * beta).epsilon(1e-13));
}

TEST_CASE("periodic trapezoid is exact below the Nyquist degree") {
  const auto r = periodic_trapezoid(9);
  for (int k = 1; k <= 8; ++k) {
    double s = 0.0;
    for (std::size_t a = 0; a < r.size(); ++a) s += r.weights[a] * std::cos(k * r.nodes[a]);
    CHECK(std::abs(s) < 1e-15);
  }
}
