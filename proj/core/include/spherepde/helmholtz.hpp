#pragma once

// Helmholtz equation Lap* u + a u = f on S^n, including the resonant case
// a = L(L+n-1) through the generalized Green function G_L.

#include "spherepde/poisson.hpp"
#include "spherepde/wavelet.hpp"

#include <optional>

namespace spherepde {

struct HelmholtzProblem {
  DimensionContext ctx;
  cplx a;
  /// Set when a = L(L+n-1); a is then derived from L.
  std::optional<int> resonant_L;

  static HelmholtzProblem non_resonant(const DimensionContext& ctx, cplx a);
  static HelmholtzProblem resonant(const DimensionContext& ctx, int L);

  /// Degree whose eigenvalue l(l+n-1) lies closest to a.
  int nearest_degree() const;
};

/// uhat(l) = fhat(l)/(a - l(l+n-1)). Throws ResonanceError naming the first
/// carried degree with |a - l(l+n-1)| <= 1e-12 max(1, |a|).
ZonalFunction solve_helmholtz_spectral(const HelmholtzProblem& p, const ZonalFunction& f);
SphereSignalS2 solve_helmholtz_spectral(const HelmholtzProblem& p, const SphereSignalS2& f);

struct HelmholtzWaveletOptions {
  int d = 1;
  ScaleGrid scales = ScaleGrid::log_spaced(1e-4, 40.0, 400);
  int iterations = 12000;
  std::optional<double> relaxation;
  std::function<void(int, const ZonalFunction&)> on_iterate;
};

struct HelmholtzWaveletResult {
  ZonalFunction u;
  FrameResult frame;
};

/// Transforms f with the Poisson wavelet of order d, scales by rho^2 and runs
/// the frame algorithm for the Theta^d(a) family. Degree 0, invisible to both
/// families, is divided out directly.
HelmholtzWaveletResult solve_helmholtz_wavelet(const HelmholtzProblem& p, const ZonalFunction& f,
                                               const HelmholtzWaveletOptions& opts = {});

double green_GL_series(const DimensionContext& ctx, int L, double t, int l_max, const SeriesOptions& opts = {});
double green_GL_integral(const DimensionContext& ctx, int L, double t);
/// Shipped closed form; UnsupportedError outside n = 2..8, L = 1..4 (L = 0 gives K).
double green_GL_closed(const DimensionContext& ctx, int L, double t);

/// Exact Gegenbauer coefficients of G_L through degree band.
ZonalFunction green_GL_coefficients(const DimensionContext& ctx, int L, int band);

enum class ResonantRoute { Spectral, Convolution };

/// Minimal solution (uhat(L) = 0). Throws SolvabilityError naming L when the
/// degree-L part of f exceeds 1e-12 ||f||.
ZonalFunction solve_resonant(const HelmholtzProblem& p, const ZonalFunction& f,
                             ResonantRoute route = ResonantRoute::Spectral);
/// Convolution with the projection of a G_L evaluator.
ZonalFunction solve_resonant(const HelmholtzProblem& p, const ZonalFunction& f, const KernelEvaluator& kernel);
SphereSignalS2 solve_resonant(const HelmholtzProblem& p, const SphereSignalS2& f);

/// ||Lap* u + a u - f|| / ||f||.
double helmholtz_residual(const HelmholtzProblem& p, const ZonalFunction& u, const ZonalFunction& f);
double helmholtz_residual(const HelmholtzProblem& p, const SphereSignalS2& u, const SphereSignalS2& f);

}  // namespace spherepde
