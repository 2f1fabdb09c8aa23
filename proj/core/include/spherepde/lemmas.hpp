#pragma once

// Recursive antiderivatives behind the even-dimension kernel derivation.
// Bold symbols of the derivation: T = 1 - t^2 (the Lemma2 parameter) and X = R - t.

#include "spherepde/expr.hpp"

#include <vector>

namespace spherepde {

/// Q_0 .. Q_{lambda-3/2} as polynomials in T. lambda must be a half-integer >= 1/2
/// (lambda = 1/2 gives an empty list).
std::vector<RationalPoly> lemma1_Q(const Rational& lambda);
/// Antiderivative in r (Shifted world, x = r) of lemma1_integrand.
Expr lemma1_antiderivative(const Rational& lambda);
/// (1 - r^2) / (r (1 - 2tr + r^2)^{lambda+1}) - 1/r.
Expr lemma1_integrand(const Rational& lambda);

/// a^{kappa, J+1/2}.
Rational lemma2_a(int kappa, int J);
/// a_0 .. a_{kappa-1}.
std::vector<Rational> lemma2_a_iota(int kappa, int J);
/// Antiderivative of X^k / (T + X^2)^{J+1/2} in the Lemma2 world.
Expr lemma2_I(int k, int J);
Expr lemma2_integrand(int k, int J);

/// Antiderivative of R^L / (1 - 2tR + R^2)^{J+1/2}, assembled from lemma2_I by
/// the binomial split of R^L = (X + t)^L.
Expr lemma3_calI(int L, int J);
/// The same from the alpha/beta/gamma/mu coefficient formulas.
Expr lemma3_direct(int L, int J);
Expr lemma3_integrand(int L, int J);
Rational lemma3_mu(int kappa, int L, int J);
/// Coefficient of the logarithm, B_{L,J+1/2}(t).
RatFunc lemma3_B(int L, int J);

/// pi_0^k .. pi_{k-1}^k as polynomials in t (k >= 1).
std::vector<RationalPoly> lemma4_pi(int k);
RationalPoly lemma4_q(int k);
/// Antiderivative of R^k ln(1 - tR + sqrt(1 - 2tR + R^2)), k >= 1.
Expr lemma4_log_integral(int k);
/// k = 0 companion: R LogB - R + LogA.
Expr log_integral_k0();
Expr lemma4_integrand(int k);

}  // namespace spherepde
