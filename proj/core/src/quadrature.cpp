#include "spherepde/quadrature.hpp"

#include "spherepde/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>

namespace spherepde {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
  double s = 0.0;
  for (size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
  return s;
}

double QuadratureRule::integrate(const std::function<double(double)>& f, double a, double b) const {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (b + a);
  double s = 0.0;
  for (size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(mid + half * nodes[i]);
  return half * s;
}

QuadratureRule gauss_legendre(int order) {
  if (order < 1) throw DomainError("quadrature order must be >= 1");
  QuadratureRule q;
  q.order = order;
  q.nodes.resize(static_cast<size_t>(order));
  q.weights.resize(static_cast<size_t>(order));
  const int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    q.nodes[static_cast<size_t>(i)] = -x;
    q.nodes[static_cast<size_t>(order - 1 - i)] = x;
    q.weights[static_cast<size_t>(i)] = w;
    q.weights[static_cast<size_t>(order - 1 - i)] = w;
  }
  if (order % 2 == 1) q.nodes[static_cast<size_t>(order / 2)] = 0.0;
  return q;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const AdaptiveOptions& opts, double* error_estimate) {
  double err = 0.0;
  double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, a, b, opts.max_depth, opts.tol, &err);
  if (!std::isfinite(v)) throw ConvergenceError("adaptive quadrature produced a non-finite value");
  if (error_estimate) *error_estimate = err;
  return v;
}

double integrate_endpoint_singular(const std::function<double(double, double)>& f, double a,
                                   double b, double tol) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto g = [&](double x, double xc) {
    double to_b = xc > 0.0 ? xc : b - x;
    return f(x, to_b);
  };
  double v = 0.0;
  try {
    v = integrator.integrate(g, a, b, tol);
  } catch (const boost::math::evaluation_error& e) {
    throw ConvergenceError(e.what());
  }
  if (!std::isfinite(v)) throw ConvergenceError("tanh-sinh quadrature produced a non-finite value");
  return v;
}

}  // namespace spherepde
