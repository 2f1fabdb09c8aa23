#pragma once

// Evaluators for the zonal kernels
//   G_L(t) = -sum_{l != L} ((lambda+l)/lambda) C_l^lambda(t) / ((l-L)(l+n+L-1)),
// whose L = 0 member is the Poisson kernel K.

#include "spherepde/special.hpp"

namespace spherepde {

enum class SeriesMode { Raw, Cesaro, Abel };

struct SeriesOptions {
  SeriesMode mode = SeriesMode::Cesaro;
  /// Abel factor r^l; only used in Abel mode.
  double abel_r = 0.999;
  /// Lowest Cesaro order and number of extra orders used for the
  /// extrapolation to order zero; 0 picks defaults from the dimension.
  int cesaro_order = 0;
  int cesaro_extra = 0;
};

/// Degree-l coefficient of G_L with respect to C_l^lambda (zero at l = L).
double green_coefficient(const DimensionContext& ctx, int L, int l);

/// Truncated series through degree l_max. Raw mode throws DivergenceError when
/// the tail terms stop decaying.
double green_series(const DimensionContext& ctx, int L, double t, int l_max, const SeriesOptions& opts = {});

/// Integral representation with the Poisson kernel, reduced to one radial
/// integral: G_L = -int_0^1 S(r) (r^{-(L+1)} - r^{n+L-2})/(n+2L-1) dr - finite sum,
/// S(r) the Poisson kernel series without its first L+1 terms.
double green_integral(const DimensionContext& ctx, int L, double t, double tol = 1e-13);
/// Same without the near-pole guard (quadrature nodes may crowd t = 1);
/// `one_minus_t` carries 1 - t without cancellation.
double green_integral_unchecked(const DimensionContext& ctx, int L, double t, double one_minus_t,
                                double tol = 1e-13);

/// int_0^1 R^{-(n+2L)} int_0^R r^{n+L-2+l} dr dR by nested Gauss-Legendre quadrature.
double green_identity_integral(int n, int L, int l);

/// Refuses t in (1 - 1e-8, 1] and |t| > 1.
void check_kernel_argument(double t);

}  // namespace spherepde
