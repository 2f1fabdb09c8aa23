#pragma once

#include "spherepde/rational.hpp"

#include <vector>

namespace spherepde {

/// Sphere S^n embedded in R^{n+1}. Everything else is parameterised by this.
class DimensionContext {
 public:
  explicit DimensionContext(int n);

  int n() const { return n_; }
  /// Gegenbauer index (n-1)/2.
  double lambda() const { return 0.5 * (n_ - 1); }
  Rational lambda_exact() const { return Rational(n_ - 1, 2); }
  /// Surface measure 2 pi^{(n+1)/2} / Gamma((n+1)/2).
  double sigma() const { return sigma_; }
  /// Sigma_{n-1}/Sigma_n: turns int_{-1}^{1} g(t) (1-t^2)^{(n-2)/2} dt into a
  /// normalized surface mean of a zonal g.
  double zonal_measure() const { return zonal_measure_; }
  /// Eigenvalue of the Laplace-Beltrami operator on degree l (non-positive).
  double eigenvalue(int l) const { return -static_cast<double>(l) * (l + n_ - 1); }
  /// (lambda + l)/lambda, the reproducing-kernel weight of degree l.
  double kernel_weight(int l) const { return (lambda() + l) / lambda(); }

  friend bool operator==(const DimensionContext& a, const DimensionContext& b) { return a.n_ == b.n_; }
  friend bool operator!=(const DimensionContext& a, const DimensionContext& b) { return a.n_ != b.n_; }

 private:
  int n_;
  double sigma_;
  double zonal_measure_;
};

/// C_l^lambda(t) by the ascending three-term recurrence.
double gegenbauer(int l, double lambda, double t);
/// C_0^lambda(t) .. C_L^lambda(t).
std::vector<double> gegenbauer_all(int L, double lambda, double t);
/// C_l^lambda(1) = binom(l + 2 lambda - 1, l).
double gegenbauer_at_one(int l, double lambda);
/// Uniform bound (n + l - 2)^{n-2} on |C_l^{(n-1)/2}| over [-1, 1].
double gegenbauer_sup_bound(int l, int n);

/// Normalized Poisson kernel p_r(t) = (1 - r^2) / (Sigma_n (1 - 2rt + r^2)^{(n+1)/2}).
double poisson_kernel(const DimensionContext& ctx, double r, double t);

/// Gamma(a)/Gamma(b) through log-gamma; throws OverflowError when not representable.
double gamma_ratio(double a, double b);
/// k!!, with (-1)!! = 0!! = 1.
BigInt double_factorial(long k);
/// Generalized binomial a(a-1)...(a-k+1)/k!; zero for k < 0.
Rational binomial(const Rational& a, long k);
/// Integer binomial with the convention binom(J, i) = 0 when i > J or i < 0.
BigInt binomial(long n, long k);
BigInt factorial(long k);

}  // namespace spherepde
