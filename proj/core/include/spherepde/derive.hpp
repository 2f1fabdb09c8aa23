#pragma once

// Closed-form Poisson kernel for even n, assembled from the lemma antiderivatives:
//   gamma(R) = int (p_r - 1)/r dr,   K = gamma(0)/(n-1) - int_0^1 R^{n-2} gamma(R) dR.

#include "spherepde/closed_form.hpp"
#include "spherepde/expr.hpp"

namespace spherepde {

/// Antiderivative in R of (Sigma_n p_R - 1)/R (Shifted world).
Expr derive_gamma(int n);
/// Antiderivative in R of R^{n-2} gamma(R) (Shifted world).
Expr derive_zeta(int n);
/// Exact kernel K for even n in [2, 12]; odd n throws UnsupportedError.
ClosedFormZonal derive_kernel_K_even(int n);

}  // namespace spherepde
