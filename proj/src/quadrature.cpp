#include "coslab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "coslab/gamma.hpp"

namespace coslab {
namespace {

// p_N(x) and p_N'(x) of the orthonormal family, plus sum_{k<N} p_k(x)^2.
struct PolyEval {
  double p;
  double dp;
  double christoffel;
};

PolyEval evaluate(const JacobiRecurrence& rec, int N, double x) {
  double p_prev = 0.0, p = 1.0;
  double dp_prev = 0.0, dp = 0.0;
  double sum = 0.0;
  for (int k = 0; k < N; ++k) {
    sum += p * p;
    const double b_prev = k > 0 ? rec.offdiag[k - 1] : 0.0;
    const double b_next = rec.offdiag[k];
    const double p_next = ((x - rec.diag[k]) * p - b_prev * p_prev) / b_next;
    const double dp_next = (p + (x - rec.diag[k]) * dp - b_prev * dp_prev) / b_next;
    p_prev = p;
    p = p_next;
    dp_prev = dp;
    dp = dp_next;
  }
  return {p, dp, sum};
}

}  // namespace

JacobiRecurrence jacobi_recurrence(int N, double a, double b) {
  if (!(a > -1.0 && b > -1.0)) throw std::invalid_argument("Jacobi exponents must exceed -1");
  JacobiRecurrence rec;
  rec.diag.resize(N);
  rec.offdiag.resize(N);
  const double s = a + b;
  for (int k = 0; k < N; ++k) {
    if (k == 0) {
      rec.diag[k] = (b - a) / (s + 2.0);
    } else {
      rec.diag[k] = (b * b - a * a) / ((2.0 * k + s) * (2.0 * k + s + 2.0));
    }
    const int m = k + 1;
    double beta;
    if (m == 1) {
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + s) * (2.0 + s) * (3.0 + s));
    } else {
      const double d = 2.0 * m + s;
      beta = 4.0 * m * (m + a) * (m + b) * (m + s) / (d * d * (d + 1.0) * (d - 1.0));
    }
    rec.offdiag[k] = std::sqrt(beta);
  }
  return rec;
}

QuadratureRule jacobi_rule(int N, double a, double b) {
  if (N < 1) throw std::invalid_argument("rule needs at least one node");
  const auto rec = jacobi_recurrence(N, a, b);
  Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(rec.diag.data(), N);
  Eigen::VectorXd sub = Eigen::Map<const Eigen::VectorXd>(rec.offdiag.data(), N - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

  QuadratureRule rule;
  rule.nodes.resize(N);
  rule.weights.resize(N);
  for (int k = 0; k < N; ++k) {
    double x = solver.eigenvalues()[k];
    for (int it = 0; it < 3; ++it) {
      const auto e = evaluate(rec, N, x);
      if (e.dp == 0.0) break;
      const double step = e.p / e.dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    rule.nodes[k] = x;
    rule.weights[k] = 1.0 / evaluate(rec, N, x).christoffel;
  }
  double total = 0.0;
  for (double w : rule.weights) total += w;
  for (double& w : rule.weights) w /= total;
  return rule;
}

QuadratureRule gauss_jacobi_rule(int n, int N) {
  if (n < 2) throw std::invalid_argument("dimension n must be >= 2");
  const double e = 0.5 * (n - 3);
  return jacobi_rule(N, e, e);
}

QuadratureRule gauss_legendre_rule(int N) { return jacobi_rule(N, 0.0, 0.0); }

QuadratureRule abs_power_rule(int n, double alpha, int N) {
  if (!(alpha > 0.0)) throw std::invalid_argument("abs_power_rule requires alpha > 0");
  // weight r^{alpha/2-1} (1-r)^{(n-3)/2} dr on [0, 1], r = (1+x)/2
  const auto base = jacobi_rule(N, 0.5 * (n - 3), 0.5 * alpha - 1.0);
  QuadratureRule rule;
  rule.nodes.resize(2 * N);
  rule.weights.resize(2 * N);
  for (int k = 0; k < N; ++k) {
    const double t = std::sqrt(0.5 * (1.0 + base.nodes[k]));
    rule.nodes[N - 1 - k] = -t;
    rule.nodes[N + k] = t;
    rule.weights[N - 1 - k] = 0.5 * base.weights[k];
    rule.weights[N + k] = 0.5 * base.weights[k];
  }
  return rule;
}

double abs_power_mass(int n, double alpha) {
  return gamma_ratio({0.5 * n, 0.5 * alpha}, {0.5, 0.5 * (alpha + n - 1)});
}

QuadratureRule sine_power_rule(int n, double p, int N) {
  const double e = 0.5 * (p + n - 3);
  return jacobi_rule(N, e, e);
}

double sine_power_mass(int n, double p) {
  // c_n B(1/2, (n-1+p)/2), c_n = Gamma(n/2) / (sqrt(pi) Gamma((n-1)/2))
  return gamma_ratio({0.5 * n, 0.5 * (n - 1 + p)}, {0.5 * (n - 1), 0.5 * (n + p)});
}

QuadratureRule periodic_trapezoid(int N) {
  QuadratureRule rule;
  rule.nodes.resize(N);
  rule.weights.assign(N, 1.0 / N);
  for (int k = 0; k < N; ++k) rule.nodes[k] = 2.0 * std::numbers::pi * k / N;
  return rule;
}

}  // namespace coslab
