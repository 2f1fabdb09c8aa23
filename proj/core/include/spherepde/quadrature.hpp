#pragma once

#include <functional>
#include <vector>

namespace spherepde {

/// Gauss-Legendre rule on [-1, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;

  double integrate(const std::function<double(double)>& f) const;
  /// Same rule mapped affinely onto [a, b].
  double integrate(const std::function<double(double)>& f, double a, double b) const;
};

/// Nodes by Newton iteration on P_order, ascending.
QuadratureRule gauss_legendre(int order);

struct AdaptiveOptions {
  double tol = 1e-13;
  unsigned max_depth = 20;
};

/// Adaptive Gauss-Kronrod (61 point) on a finite interval.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const AdaptiveOptions& opts = {}, double* error_estimate = nullptr);

/// Double-exponential rule on [a, b] that tolerates integrable endpoint
/// singularities. The integrand receives x and b - x, the latter accurate even
/// when x rounds to b.
double integrate_endpoint_singular(const std::function<double(double, double)>& f, double a,
                                   double b, double tol = 1e-12);

}  // namespace spherepde
