#include "oracles.hpp"
#include "spherepde/errors.hpp"
#include "spherepde/quadrature.hpp"
#include "spherepde/special.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace spherepde;
using doctest::Approx;

TEST_CASE("DimensionContext fixes lambda and the surface measure") {
  CHECK(DimensionContext(2).sigma() == Approx(4 * std::numbers::pi).epsilon(1e-15));
  CHECK(DimensionContext(3).sigma() == Approx(2 * std::numbers::pi * std::numbers::pi).epsilon(1e-15));
  CHECK(DimensionContext(4).lambda_exact() == Rational(3, 2));
  CHECK(DimensionContext(5).lambda() == 2.0);
  CHECK(DimensionContext(3).eigenvalue(2) == -8.0);
  CHECK(DimensionContext(3).kernel_weight(2) == 3.0);
  for (int n = 2; n <= 8; ++n)
    CHECK(DimensionContext(n).zonal_measure() == Approx(oracle::sigma(n - 1) / oracle::sigma(n)).epsilon(1e-14));
  CHECK_THROWS_AS(DimensionContext(1), DomainError);
}

TEST_CASE("gegenbauer examples") {
  CHECK(gegenbauer(0, 0.7, 0.3) == 1.0);
  CHECK(gegenbauer(1, 0.5, 0.5) == Approx(0.5));
  CHECK(gegenbauer(3, 0.5, 0.5) == Approx(-0.4375).epsilon(1e-15));
  CHECK(gegenbauer(2, 1.0, 1.0) == Approx(3.0).epsilon(1e-15));
  CHECK_THROWS_AS(gegenbauer(2, 1.0, 1.01), DomainError);
  CHECK_THROWS_AS(gegenbauer(2, 0.0, 0.5), DomainError);
  CHECK_THROWS_AS(gegenbauer(-1, 1.0, 0.5), DomainError);
}

TEST_CASE("gegenbauer recurrence matches the explicit sum") {
  for (double lambda : {0.5, 1.0, 1.5, 2.5})
    for (int l = 0; l <= 10; ++l)
      for (int i = 0; i <= 100; ++i) {
        const double t = -1.0 + 0.02 * i;
        // the explicit sum cancels, so compare on the scale of C_l(1)
        CHECK(std::fabs(gegenbauer(l, lambda, t) - oracle::gegenbauer_explicit(l, lambda, t)) <=
              1e-12 * gegenbauer_at_one(l, lambda) * (l + 1));
      }
}

TEST_CASE("gegenbauer_all agrees with single evaluations and the value at one") {
  const auto all = gegenbauer_all(40, 1.5, -0.37);
  REQUIRE(all.size() == 41);
  for (int l = 0; l <= 40; ++l) CHECK(all[static_cast<size_t>(l)] == Approx(gegenbauer(l, 1.5, -0.37)).epsilon(1e-14));
  for (int l = 0; l <= 20; ++l) {
    const double lam = 2.0;
    const double binom = std::exp(std::lgamma(l + 2 * lam) - std::lgamma(l + 1.0) - std::lgamma(2 * lam));
    CHECK(gegenbauer_at_one(l, lam) == Approx(binom).epsilon(1e-12));
    CHECK(gegenbauer(l, lam, 1.0) == Approx(binom).epsilon(1e-12));
  }
}

TEST_CASE("gegenbauer_sup_bound examples and bound property") {
  CHECK(gegenbauer_sup_bound(3, 2) == 1.0);
  CHECK(gegenbauer_sup_bound(2, 3) == 3.0);
  CHECK(gegenbauer_sup_bound(0, 5) == 27.0);
  double maxc2 = 0.0;
  for (int i = 0; i <= 2000; ++i) maxc2 = std::max(maxc2, std::fabs(gegenbauer(2, 1.0, -1.0 + i * 1e-3)));
  CHECK(maxc2 == Approx(3.0));
  for (int n = 2; n <= 10; ++n)
    for (int i = 0; i <= 200; ++i) {
      const double t = -1.0 + 0.01 * i;
      const auto c = gegenbauer_all(50, 0.5 * (n - 1), t);
      for (int l = 0; l <= 50; ++l) CHECK(std::fabs(c[static_cast<size_t>(l)]) <= gegenbauer_sup_bound(l, n) * (1 + 1e-12));
    }
}

TEST_CASE("poisson_kernel closed form, series and total mass") {
  const DimensionContext s2(2), s3(3);
  CHECK(poisson_kernel(s2, 0.0, 0.3) == Approx(1.0 / (4 * std::numbers::pi)).epsilon(1e-15));
  CHECK(poisson_kernel(s2, 0.5, 1.0) == Approx(6.0 / (4 * std::numbers::pi)).epsilon(1e-14));
  double series = 0.0;
  for (int l = 0; l <= 200; ++l) series += std::pow(0.7, l) * s3.kernel_weight(l) * gegenbauer(l, s3.lambda(), 0.3);
  CHECK(poisson_kernel(s3, 0.7, 0.3) * s3.sigma() == Approx(series).epsilon(1e-12));
  for (int n = 2; n <= 5; ++n)
    for (double r : {0.0, 0.3, 0.9}) {
      const DimensionContext c(n);
      const double mass = oracle::zonal_mean(n, [&](double t) { return poisson_kernel(c, r, t) * c.sigma(); });
      CHECK(mass == Approx(1.0).epsilon(1e-10));
    }
  CHECK_THROWS_AS(poisson_kernel(s2, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(poisson_kernel(s2, 0.5, -1.5), DomainError);
}

TEST_CASE("poisson_kernel partial sums converge geometrically") {
  const DimensionContext c(4);
  const double r = 0.6, t = -0.2;
  const double exact = poisson_kernel(c, r, t) * c.sigma();
  double s = 0.0, prev_err = 1.0;
  for (int L = 0; L <= 60; ++L) {
    s += std::pow(r, L) * c.kernel_weight(L) * gegenbauer(L, c.lambda(), t);
    const double err = std::fabs(s - exact);
    if (L % 20 == 0 && L > 0) {
      CHECK(err <= std::pow(r, L) * std::pow(L + 3.0, 4));
      CHECK(err < prev_err);
      prev_err = err;
    }
  }
}

TEST_CASE("combinatorics") {
  CHECK(gamma_ratio(6, 1) == Approx(120.0).epsilon(1e-14));
  CHECK(gamma_ratio(100.5, 100) == Approx(std::exp(std::lgamma(100.5) - std::lgamma(100.0))).epsilon(1e-13));
  CHECK_THROWS_AS(gamma_ratio(400, 1), OverflowError);
  CHECK_THROWS_AS(gamma_ratio(-1, 1), DomainError);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(7) == 105);
  CHECK(double_factorial(8) == 384);
  CHECK_THROWS_AS(double_factorial(-2), DomainError);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(factorial(30) == BigInt("265252859812191058636308480000000"));
}

TEST_CASE("Gauss-Legendre rules") {
  for (int order : {1, 2, 5, 16, 64, 200}) {
    const QuadratureRule q = gauss_legendre(order);
    double w = 0.0;
    for (double x : q.weights) {
      CHECK(x > 0.0);
      w += x;
    }
    CHECK(w == Approx(2.0).epsilon(1e-13));
    for (size_t i = 1; i < q.nodes.size(); ++i) CHECK(q.nodes[i - 1] < q.nodes[i]);
    // exact through degree 2 order - 1
    for (int k = 0; k <= 2 * order - 1 && k <= 60; ++k) {
      const double exact = (k % 2) ? 0.0 : 2.0 / (k + 1);
      CHECK(q.integrate([k](double x) { return std::pow(x, k); }) == Approx(exact).epsilon(1e-12).scale(1.0));
    }
  }
  CHECK(gauss_legendre(8).integrate([](double x) { return std::exp(x); }, 0.0, 1.0) == Approx(std::exp(1.0) - 1).epsilon(1e-14));
  CHECK_THROWS_AS(gauss_legendre(0), DomainError);
}

TEST_CASE("adaptive and endpoint-singular quadrature") {
  CHECK(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, std::numbers::pi) == Approx(2.0).epsilon(1e-13));
  CHECK(integrate_endpoint_singular([](double x, double) { return std::log(x); }, 0.0, 1.0) == Approx(-1.0).epsilon(1e-12));
  // integrand uses the accurate distance to the right endpoint
  CHECK(integrate_endpoint_singular([](double, double bx) { return 1.0 / std::sqrt(bx); }, 0.0, 1.0) ==
        Approx(2.0).epsilon(1e-12));
}
