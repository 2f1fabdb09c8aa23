#include "spherepde/poisson.hpp"

#include "spherepde/closed_form.hpp"
#include "spherepde/errors.hpp"
#include "spherepde/quadrature.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace spherepde {

KernelMethod parse_kernel_method(const std::string& name) {
  if (name == "series") return KernelMethod::Series;
  if (name == "integral") return KernelMethod::Integral;
  if (name == "closed") return KernelMethod::Closed;
  throw UnsupportedError("unknown kernel method '" + name + "' (series, integral, closed)");
}

std::string to_string(KernelMethod m) {
  switch (m) {
    case KernelMethod::Series: return "series";
    case KernelMethod::Integral: return "integral";
    case KernelMethod::Closed: return "closed";
  }
  return "?";
}

double KernelEvaluator::operator()(double t) const {
  switch (method) {
    case KernelMethod::Series: return green_series(ctx, L, t, series_lmax, series);
    case KernelMethod::Integral: return green_integral(ctx, L, t, tol);
    case KernelMethod::Closed: return table_green_GL(ctx.n(), L).eval(t);
  }
  throw UnsupportedError("unknown kernel method");
}

double kernel_K_series(const DimensionContext& ctx, double t, int l_max, const SeriesOptions& opts) {
  return green_series(ctx, 0, t, l_max, opts);
}

double kernel_K_integral(const DimensionContext& ctx, double t) { return green_integral(ctx, 0, t); }

double kernel_K_closed(const DimensionContext& ctx, double t) { return table_kernel_K(ctx.n()).eval(t); }

ZonalFunction kernel_coefficients(const DimensionContext& ctx, int L) {
  auto k = ZonalFunction::zero(ctx, L);
  for (int l = 1; l <= L; ++l) k[l] = green_coefficient(ctx, 0, l);
  return k;
}

ZonalFunction project_kernel(const KernelEvaluator& eval, int L) {
  if (L < 0) throw DomainError("bandlimit must be >= 0");
  const DimensionContext& ctx = eval.ctx;
  const int n = ctx.n();
  std::function<double(double, double)> kernel;
  switch (eval.method) {
    case KernelMethod::Closed: {
      const ClosedFormZonal& cf = table_green_GL(n, eval.L);
      kernel = [&cf](double t, double s) { return cf.eval_unchecked(t, s); };
      break;
    }
    case KernelMethod::Integral:
      kernel = [&eval](double t, double s) { return green_integral_unchecked(eval.ctx, eval.L, t, s, eval.tol); };
      break;
    case KernelMethod::Series:
      throw UnsupportedError("the series evaluator diverges near t=1 and cannot be projected");
  }
  // the rule visits the same nodes for every degree; t alone rounds to 1 near the pole
  std::map<std::pair<double, double>, double> cache;
  auto cached = [&](double t, double s) {
    auto it = cache.find({t, s});
    if (it != cache.end()) return it->second;
    double v = kernel(t, s);
    cache.emplace(std::make_pair(t, s), v);
    return v;
  };
  const double lam = ctx.lambda();
  const double ex = 0.5 * (n - 2);
  auto out = ZonalFunction::zero(ctx, L);
  for (int l = 0; l <= L; ++l) {
    if (l == eval.L) continue;
    auto integrand = [&](double t, double s) {
      // bounded up to a logarithm; dropping s < 1e-60 keeps the pole from overflowing
      if (s < 1e-60) return 0.0;
      const double w = ex == 0.0 ? 1.0 : std::pow(s * (1.0 + t), ex);
      return cached(t, s) * gegenbauer(l, lam, t) * w;
    };
    const double v = integrate_endpoint_singular(integrand, -1.0, 1.0, 1e-12);
    out[l] = ctx.zonal_measure() * v / gegenbauer_norm_sq(ctx, l);
  }
  return out;
}

namespace {

void check_mean(cplx mean, double fnorm) {
  if (std::abs(mean) > 1e-12 * fnorm) throw SolvabilityError("mean must vanish: the degree 0 coefficient is nonzero", 0);
}

}  // namespace

ZonalFunction solve_poisson(const ZonalFunction& f, PoissonRoute route) {
  check_mean(f[0], norm(f));
  if (route == PoissonRoute::Convolution) return zonal_convolve(f, kernel_coefficients(f.ctx(), f.bandlimit()));
  auto u = ZonalFunction::zero(f.ctx(), f.bandlimit());
  for (int l = 1; l <= f.bandlimit(); ++l) u[l] = f[l] / f.ctx().eigenvalue(l);
  return u;
}

ZonalFunction solve_poisson(const ZonalFunction& f, const KernelEvaluator& kernel) {
  if (kernel.ctx != f.ctx()) throw MismatchError("kernel and signal live on different spheres");
  if (kernel.L != 0) throw DomainError("Poisson solver needs the L=0 kernel");
  check_mean(f[0], norm(f));
  return zonal_convolve(f, project_kernel(kernel, f.bandlimit()));
}

SphereSignalS2 solve_poisson(const SphereSignalS2& f, PoissonRoute route) {
  check_mean(f(0, 0), norm(f));
  const DimensionContext ctx(2);
  if (route == PoissonRoute::Convolution) return convolve(f, kernel_coefficients(ctx, f.bandlimit()));
  SphereSignalS2 u(f.bandlimit());
  for (int l = 1; l <= f.bandlimit(); ++l)
    for (int m = -l; m <= l; ++m) u(l, m) = f(l, m) / ctx.eigenvalue(l);
  return u;
}

GridS2 solve_poisson_grid(const GridS2& f, int L, const KernelEvaluator& kernel) {
  if (kernel.ctx.n() != 2) throw MismatchError("grid route is defined for n = 2 only");
  if (kernel.L != 0) throw DomainError("Poisson solver needs the L=0 kernel");
  const SphereSignalS2 a = s2_forward(f, L);
  check_mean(a(0, 0), norm(a));
  return s2_inverse(convolve(a, project_kernel(kernel, L)), f.geometry);
}

double poisson_residual(const ZonalFunction& u, const ZonalFunction& f) {
  return norm(laplace_beltrami(u) - f) / norm(f);
}

double poisson_residual(const SphereSignalS2& u, const SphereSignalS2& f) {
  return norm(laplace_beltrami(u) - f) / norm(f);
}

}  // namespace spherepde
