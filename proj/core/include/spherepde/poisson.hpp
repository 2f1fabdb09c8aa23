#pragma once

// Poisson equation Lap* u = f on S^n. The solution operator is convolution with
// the kernel K(t) = -sum_{l>=1} ((lambda+l)/lambda) C_l^lambda(t) / (l(l+n-1)).

#include "spherepde/green.hpp"
#include "spherepde/s2.hpp"
#include "spherepde/zonal.hpp"

#include <string>

namespace spherepde {

enum class KernelMethod { Series, Integral, Closed };

KernelMethod parse_kernel_method(const std::string& name);
std::string to_string(KernelMethod m);

/// Point evaluator for K (L = 0) or the generalized Green function G_L.
struct KernelEvaluator {
  DimensionContext ctx;
  KernelMethod method = KernelMethod::Integral;
  int L = 0;
  /// Truncation degree for the series method.
  int series_lmax = 2000;
  SeriesOptions series;
  double tol = 1e-13;

  KernelEvaluator(DimensionContext c, KernelMethod m, int green_L = 0) : ctx(c), method(m), L(green_L) {}

  /// Refuses t in (1 - 1e-8, 1]. Closed requires a shipped table entry.
  double operator()(double t) const;
};

double kernel_K_series(const DimensionContext& ctx, double t, int l_max, const SeriesOptions& opts = {});
double kernel_K_integral(const DimensionContext& ctx, double t);
/// Shipped closed form; UnsupportedError outside n = 2..10.
double kernel_K_closed(const DimensionContext& ctx, double t);

/// Exact Gegenbauer coefficients of K through degree L.
ZonalFunction kernel_coefficients(const DimensionContext& ctx, int L);

/// Gegenbauer coefficients of the evaluated kernel through degree L, by
/// quadrature of the projection integral (endpoint-singular rule).
ZonalFunction project_kernel(const KernelEvaluator& eval, int L);

enum class PoissonRoute { Spectral, Convolution };

/// Throws SolvabilityError naming degree 0 when |fhat(0)| > 1e-12 ||f||.
ZonalFunction solve_poisson(const ZonalFunction& f, PoissonRoute route = PoissonRoute::Spectral);
/// Convolution against a projected kernel evaluator.
ZonalFunction solve_poisson(const ZonalFunction& f, const KernelEvaluator& kernel);
SphereSignalS2 solve_poisson(const SphereSignalS2& f, PoissonRoute route = PoissonRoute::Spectral);

/// n = 2 grid route: analyse the samples, convolve with the projected kernel,
/// return the solution sampled on the same grid.
GridS2 solve_poisson_grid(const GridS2& f, int L, const KernelEvaluator& kernel);

/// ||Lap* u - f|| / ||f||.
double poisson_residual(const ZonalFunction& u, const ZonalFunction& f);
double poisson_residual(const SphereSignalS2& u, const SphereSignalS2& f);

}  // namespace spherepde
