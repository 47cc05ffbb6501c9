#pragma once

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "sepout/error.hpp"

namespace sepout {

/// Controls the Gauss-Hermite evaluation of Laplace transforms that have no
/// closed form. `nodes` is the starting rule size; the node count doubles
/// until two consecutive rules agree to `refinement_tol` (relative) or the
/// cap is reached, at which point NonConvergence is thrown.
struct QuadratureSpec {
  int nodes = 64;
  double refinement_tol = 1e-9;
};

inline constexpr int kMaxQuadratureNodes = 1024;

inline void validate(const QuadratureSpec& q) {
  if (q.nodes < 2) throw DomainError("QuadratureSpec: nodes must be >= 2");
  if (!(q.refinement_tol > 0.0) || !std::isfinite(q.refinement_tol))
    throw DomainError("QuadratureSpec: refinement_tol must be positive and finite");
}

/// Nodes and weights for \int f(x) exp(-x^2) dx ~ sum_i w_i f(x_i).
/// Weights sum to sqrt(pi); extreme weights underflow to zero for n >= 512,
/// which is harmless for bounded integrands.
struct GaussHermiteRule {
  std::vector<double> points;   // ascending, symmetric about 0
  std::vector<double> weights;
};

namespace detail {

// Symmetric tridiagonal QL with implicit shifts (EISPACK imtql2, reduced to
// tracking the first row of the eigenvector matrix). d = diagonal,
// e = subdiagonal, z starts as (1,0,...,0); on return d holds eigenvalues
// and z the first component of each eigenvector.
inline void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e,
                           std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return;
  const double prec = std::numeric_limits<double>::epsilon();
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    while (true) {
      int m = l;
      while (m < n - 1 &&
             std::abs(e[m]) > prec * (std::abs(d[m]) + std::abs(d[m + 1]))) {
        ++m;
      }
      if (m == l) break;
      if (++iter > 50) throw Error("Gauss-Hermite: QL iteration failed to converge");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        if (std::abs(f) >= std::abs(g)) {
          c = g / f;
          r = std::hypot(c, 1.0);
          e[i + 1] = f * r;
          s = 1.0 / r;
          c *= s;
        } else {
          s = f / g;
          r = std::hypot(s, 1.0);
          e[i + 1] = g * r;
          c = 1.0 / r;
          s *= c;
        }
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  // Sort eigenvalues ascending, carrying the weight vector along.
  for (int i = 1; i < n; ++i) {
    const double dv = d[i];
    const double zv = z[i];
    int j = i - 1;
    while (j >= 0 && d[j] > dv) {
      d[j + 1] = d[j];
      z[j + 1] = z[j];
      --j;
    }
    d[j + 1] = dv;
    z[j + 1] = zv;
  }
}

// Golub-Welsch: the Jacobi matrix of the (physicists') Hermite polynomials
// has zero diagonal and subdiagonal sqrt(k/2); its eigenvalues are the nodes
// and mu0 * (first eigenvector component)^2 the weights, mu0 = sqrt(pi).
inline GaussHermiteRule make_gauss_hermite(int n) {
  std::vector<double> d(n, 0.0);
  std::vector<double> e(n, 0.0);
  std::vector<double> z(n, 0.0);
  for (int k = 1; k < n; ++k) e[k - 1] = std::sqrt(k / 2.0);
  z[0] = 1.0;
  tridiagonal_ql(d, e, z);
  GaussHermiteRule rule;
  rule.points = std::move(d);
  rule.weights.resize(n);
  const double mu0 = std::sqrt(std::numbers::pi);
  for (int i = 0; i < n; ++i) rule.weights[i] = mu0 * z[i] * z[i];
  return rule;
}

}  // namespace detail

/// Cached Gauss-Hermite rule with n nodes. Thread-safe.
inline const GaussHermiteRule& gauss_hermite(int n) {
  if (n < 1) throw DomainError("gauss_hermite: node count must be >= 1");
  static std::mutex mutex;
  static std::map<int, GaussHermiteRule> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, detail::make_gauss_hermite(n)).first;
  return it->second;
}

namespace detail {

/// Runs `eval` at q.nodes, 2*q.nodes, ... until two consecutive results agree
/// to q.refinement_tol relative. Throws NonConvergence past the node cap.
template <class Eval>
double refine_quadrature(const QuadratureSpec& q, Eval&& eval, const char* what) {
  int n = q.nodes;
  double prev = eval(n);
  while (true) {
    const int next = 2 * n;
    const double cur = eval(next);
    if (std::abs(cur - prev) <= q.refinement_tol * std::abs(cur)) return cur;
    if (next >= kMaxQuadratureNodes) {
      char msg[160];
      std::snprintf(msg, sizeof msg,
                    "%s: %d vs %d nodes still differ by %.3g relative (tol %.3g)",
                    what, n, next, std::abs(cur - prev) / std::abs(cur),
                    q.refinement_tol);
      throw NonConvergence(msg);
    }
    n = next;
    prev = cur;
  }
}

}  // namespace detail

}  // namespace sepout
