#include "spherepde/special.hpp"

#include "spherepde/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace spherepde {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_t(double t) {
  if (!(std::fabs(t) <= 1.0)) throw DomainError("t must lie in [-1, 1], got " + std::to_string(t));
}

}  // namespace

DimensionContext::DimensionContext(int n) : n_(n) {
  if (n < 2) throw DomainError("sphere dimension must be >= 2, got " + std::to_string(n));
  const double h = 0.5 * (n + 1);
  sigma_ = 2.0 * std::exp(h * std::log(kPi) - std::lgamma(h));
  // Sigma_{n-1}/Sigma_n = Gamma((n+1)/2) / (sqrt(pi) Gamma(n/2))
  zonal_measure_ = std::exp(std::lgamma(h) - std::lgamma(0.5 * n)) / std::sqrt(kPi);
}

double gegenbauer(int l, double lambda, double t) {
  if (l < 0) throw DomainError("gegenbauer degree must be >= 0");
  if (!(lambda > 0.0)) throw DomainError("gegenbauer order must be positive");
  check_t(t);
  if (l == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * lambda * t;
  for (int k = 2; k <= l; ++k) {
    double next = (2.0 * t * (k + lambda - 1.0) * cur - (k + 2.0 * lambda - 2.0) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> gegenbauer_all(int L, double lambda, double t) {
  if (L < 0) throw DomainError("gegenbauer degree must be >= 0");
  if (!(lambda > 0.0)) throw DomainError("gegenbauer order must be positive");
  check_t(t);
  std::vector<double> c(static_cast<size_t>(L) + 1);
  c[0] = 1.0;
  if (L >= 1) c[1] = 2.0 * lambda * t;
  for (int k = 2; k <= L; ++k)
    c[k] = (2.0 * t * (k + lambda - 1.0) * c[k - 1] - (k + 2.0 * lambda - 2.0) * c[k - 2]) / k;
  return c;
}

double gegenbauer_at_one(int l, double lambda) {
  // binom(l + 2 lambda - 1, l) as a running product
  double v = 1.0;
  for (int k = 1; k <= l; ++k) v *= (k + 2.0 * lambda - 1.0) / k;
  return v;
}

double gegenbauer_sup_bound(int l, int n) {
  if (l < 0 || n < 2) throw DomainError("gegenbauer_sup_bound needs l >= 0, n >= 2");
  return std::pow(static_cast<double>(n + l - 2), n - 2);
}

double poisson_kernel(const DimensionContext& ctx, double r, double t) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("poisson kernel needs 0 <= r < 1");
  check_t(t);
  double d = 1.0 - 2.0 * r * t + r * r;
  return (1.0 - r * r) / (ctx.sigma() * std::pow(d, 0.5 * (ctx.n() + 1)));
}

double gamma_ratio(double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw DomainError("gamma_ratio needs positive arguments");
  double v = std::lgamma(a) - std::lgamma(b);
  if (v > std::log(std::numeric_limits<double>::max()))
    throw OverflowError("gamma_ratio overflows double");
  return std::exp(v);
}

BigInt double_factorial(long k) {
  if (k < -1) throw DomainError("double factorial of k < -1");
  BigInt r = 1;
  for (long j = k; j > 1; j -= 2) r *= j;
  return r;
}

BigInt factorial(long k) {
  if (k < 0) throw DomainError("factorial of negative integer");
  BigInt r = 1;
  for (long j = 2; j <= k; ++j) r *= j;
  return r;
}

Rational binomial(const Rational& a, long k) {
  if (k < 0) return Rational(0);
  Rational r = 1;
  for (long j = 0; j < k; ++j) r = r * (a - j) / (j + 1);
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace spherepde
