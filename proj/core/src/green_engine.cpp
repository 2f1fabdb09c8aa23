#include "spherepde/green.hpp"

#include "spherepde/errors.hpp"
#include "spherepde/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace spherepde {

void check_kernel_argument(double t) {
  if (!(std::fabs(t) <= 1.0)) throw DomainError("t must lie in [-1, 1], got " + std::to_string(t));
  if (t > 1.0 - 1e-8) throw SingularityError("kernel is singular at t=1");
}

double green_coefficient(const DimensionContext& ctx, int L, int l) {
  if (L < 0 || l < 0) throw DomainError("degrees must be non-negative");
  if (l == L) return 0.0;
  const int n = ctx.n();
  return -ctx.kernel_weight(l) / (static_cast<double>(l - L) * (l + n + L - 1.0));
}

namespace {

std::vector<double> series_terms(const DimensionContext& ctx, int L, double t, int l_max) {
  auto c = gegenbauer_all(l_max, ctx.lambda(), t);
  std::vector<double> a(static_cast<size_t>(l_max) + 1);
  for (int l = 0; l <= l_max; ++l) a[static_cast<size_t>(l)] = green_coefficient(ctx, L, l) * c[static_cast<size_t>(l)];
  return a;
}

// (C,k) mean of the partial sums through N: sum_l a_l prod_{j=1..k} (N-l+j)/(N+j)
double cesaro_mean(const std::vector<double>& a, int k) {
  const int N = static_cast<int>(a.size()) - 1;
  double s = 0.0;
  for (int l = N; l >= 0; --l) {
    double w = 1.0;
    for (int j = 1; j <= k; ++j) w *= static_cast<double>(N - l + j) / (N + j);
    s += w * a[static_cast<size_t>(l)];
  }
  return s;
}

}  // namespace

double green_series(const DimensionContext& ctx, int L, double t, int l_max, const SeriesOptions& opts) {
  check_kernel_argument(t);
  if (L < 0) throw DomainError("L must be >= 0");
  if (l_max < std::max(1, L + 1)) throw DomainError("truncation degree must exceed L");
  const auto a = series_terms(ctx, L, t, l_max);

  switch (opts.mode) {
    case SeriesMode::Raw: {
      if (l_max >= 40) {
        // last tenth of the terms against a window in the middle
        double tail = 0.0, mid = 0.0;
        for (int l = l_max - l_max / 10; l <= l_max; ++l) tail = std::max(tail, std::fabs(a[static_cast<size_t>(l)]));
        for (int l = (4 * l_max) / 10; l <= l_max / 2; ++l) mid = std::max(mid, std::fabs(a[static_cast<size_t>(l)]));
        if (tail >= mid && tail > 0.0)
          throw DivergenceError("raw series terms do not decay (n=" + std::to_string(ctx.n()) +
                                ", t=" + std::to_string(t) + "); use cesaro or abel summation");
      }
      double s = 0.0;
      for (int l = l_max; l >= 0; --l) s += a[static_cast<size_t>(l)];
      return s;
    }
    case SeriesMode::Abel: {
      if (!(opts.abel_r > 0.0 && opts.abel_r < 1.0)) throw DomainError("abel factor must lie in (0, 1)");
      double s = 0.0;
      for (int l = l_max; l >= 0; --l) s += std::pow(opts.abel_r, l) * a[static_cast<size_t>(l)];
      return s;
    }
    case SeriesMode::Cesaro: {
      const int n = ctx.n();
      const int k0 = opts.cesaro_order > 0 ? opts.cesaro_order : (n >= 8 ? 6 : 5);
      const int M = opts.cesaro_extra > 0 ? opts.cesaro_extra : (n >= 9 ? 3 : n == 8 ? 5 : 4);
      // Lagrange extrapolation of the (C,k) means to k = 0
      std::vector<double> ks, vals;
      for (int k = k0; k <= k0 + M; ++k) {
        ks.push_back(k);
        vals.push_back(cesaro_mean(a, k));
      }
      double s = 0.0;
      for (size_t i = 0; i < ks.size(); ++i) {
        double w = 1.0;
        for (size_t j = 0; j < ks.size(); ++j)
          if (j != i) w *= (0.0 - ks[j]) / (ks[i] - ks[j]);
        s += w * vals[i];
      }
      return s;
    }
  }
  throw UnsupportedError("unknown summation mode");
}

double green_integral(const DimensionContext& ctx, int L, double t, double tol) {
  check_kernel_argument(t);
  return green_integral_unchecked(ctx, L, t, 1.0 - t, tol);
}

double green_integral_unchecked(const DimensionContext& ctx, int L, double t, double one_minus_t, double tol) {
  if (L < 0) throw DomainError("L must be >= 0");
  const int n = ctx.n();
  const double lam = ctx.lambda();
  const double p = n + 2.0 * L - 1.0;
  constexpr int kTerms = 160;
  auto c = gegenbauer_all(kTerms, lam, t);
  std::vector<double> h(static_cast<size_t>(kTerms) + 1);
  for (int l = 0; l <= kTerms; ++l) h[static_cast<size_t>(l)] = (lam + l) / lam * c[static_cast<size_t>(l)];

  // small r: S(r) r^{-(L+1)} as a power series, no cancellation
  auto inner_small = [&](double r) {
    double s = 0.0;
    for (int l = kTerms; l > L; --l) s = s * r + h[static_cast<size_t>(l)];
    return s * (1.0 - std::pow(r, n + 2 * L - 1)) / p;
  };
  // larger r: closed Poisson kernel minus the first L+1 terms
  auto inner_large = [&](double r) {
    const double d = (1.0 - r) * (1.0 - r) + 2.0 * r * one_minus_t;
    double full = (1.0 - r * r) / std::pow(d, 0.5 * (n + 1));
    double head = 0.0;
    for (int l = L; l >= 0; --l) head = head * r + h[static_cast<size_t>(l)];
    const double S = full - head;
    return S * (std::pow(r, -(L + 1)) - std::pow(r, n + L - 2)) / p;
  };
  AdaptiveOptions ao;
  ao.tol = tol;
  ao.max_depth = 15;
  double v = integrate_adaptive(inner_small, 0.0, 0.5, ao) + integrate_adaptive(inner_large, 0.5, 1.0, ao);
  double corr = 0.0;
  for (int l = 0; l < L; ++l) corr += h[static_cast<size_t>(l)] / (static_cast<double>(l - L) * (l + n + L - 1.0));
  return -v - corr;
}

double green_identity_integral(int n, int L, int l) {
  if (n < 2 || L < 0 || l <= L) throw DomainError("identity needs n >= 2 and 0 <= L < l");
  const int m = n + L - 2 + l;
  // inner integrand is a polynomial of degree m; the outer one of degree l-L-1
  const QuadratureRule inner = gauss_legendre(m / 2 + 2);
  const QuadratureRule outer = gauss_legendre(std::max(2, (l - L) / 2 + 2));
  auto outer_f = [&](double R) {
    double I = inner.integrate([&](double r) { return std::pow(r, m); }, 0.0, R);
    return std::pow(R, -(n + 2 * L)) * I;
  };
  return outer.integrate(outer_f, 0.0, 1.0);
}

}  // namespace spherepde
