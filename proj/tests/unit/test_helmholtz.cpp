#include "oracles.hpp"
#include "spherepde/errors.hpp"
#include "spherepde/helmholtz.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace spherepde;
using doctest::Approx;

namespace {

constexpr double pi = std::numbers::pi;

ZonalFunction without_degree(ZonalFunction f, int L) {
  f[L] = 0.0;
  return f;
}

}  // namespace

TEST_CASE("non-resonant spectral route") {
  const DimensionContext c2(2);
  const auto p = HelmholtzProblem::non_resonant(c2, 5.0);
  const auto u = solve_helmholtz_spectral(p, ZonalFunction(c2, {0.0, 1.0}));
  CHECK(u[1].real() == Approx(1.0 / 3.0).epsilon(1e-15));
  try {
    solve_helmholtz_spectral(HelmholtzProblem::non_resonant(c2, 2.0), ZonalFunction(c2, {0.0, 1.0}));
    FAIL("expected a resonance error");
  } catch (const ResonanceError& e) {
    CHECK(e.degree() == 1);
  }
  CHECK(HelmholtzProblem::non_resonant(c2, 5.5).nearest_degree() == 2);

  std::mt19937 g(5);
  for (int n = 2; n <= 6; ++n) {
    const DimensionContext c(n);
    const ZonalFunction f(c, oracle::random_coeffs(g, 20, true));
    const auto a0 = solve_helmholtz_spectral(HelmholtzProblem::non_resonant(c, 0.0), f);
    const auto ps = solve_poisson(f);
    for (int l = 1; l <= 20; ++l) CHECK(std::abs(a0[l] - ps[l]) < 1e-15 * std::abs(ps[l]) + 1e-300);
    const auto pc = HelmholtzProblem::non_resonant(c, cplx(3.3, -1.2));
    const ZonalFunction h(c, oracle::random_coeffs(g, 20));
    CHECK(helmholtz_residual(pc, solve_helmholtz_spectral(pc, h), h) < 1e-12);
  }
}

TEST_CASE("wavelet route matches the spectral route") {
  std::mt19937 g(6);
  const DimensionContext c2(2);
  const ZonalFunction f(c2, oracle::random_coeffs(g, 12));
  const auto p = HelmholtzProblem::non_resonant(c2, 5.5);
  const auto spec = solve_helmholtz_spectral(p, f);
  const auto w = solve_helmholtz_wavelet(p, f);
  CHECK(norm(w.u - spec) / norm(spec) < 1e-6);
  CHECK(w.frame.delta < 1.0);

  const auto z = solve_helmholtz_wavelet(p, ZonalFunction::zero(c2, 6));
  for (const auto& x : z.u.coeffs()) CHECK(x == cplx(0.0));
  CHECK_THROWS_AS(solve_helmholtz_wavelet(HelmholtzProblem::non_resonant(c2, 6.0), f), ResonanceError);
}

TEST_CASE("generalized Green function spot values") {
  const DimensionContext c2(2), c3(3), c5(5);
  CHECK(green_GL_closed(c3, 1, 0.0) == Approx(pi / 4).epsilon(1e-14));
  CHECK(green_GL_integral(c3, 1, 0.0) == Approx(pi / 4).epsilon(1e-6));
  CHECK(green_GL_series(c3, 1, 0.0, 2000) == Approx(pi / 4).epsilon(1e-6));
  CHECK(green_GL_closed(c3, 2, 0.0) == Approx(-1.0 / 12).epsilon(1e-14));
  CHECK(green_GL_closed(c5, 1, 0.0) == Approx(3 * pi / 16).epsilon(1e-14));
  CHECK(green_GL_closed(c2, 2, 0.0) == Approx(-7.0 / 20 - 0.5 * std::log(0.5)).epsilon(1e-13));
  CHECK(green_GL_closed(c2, 1, 0.0) == Approx(1.0).epsilon(1e-14));
  CHECK(green_GL_series(c2, 1, 0.0, 2000) == Approx(1.0).epsilon(1e-6));
  CHECK(green_identity_integral(2, 1, 3) == Approx(0.1).epsilon(1e-12));
  for (int n = 2; n <= 6; ++n)
    for (int L = 0; L < 10; ++L)
      for (int l = L + 1; l <= 10; ++l)
        CHECK(green_identity_integral(n, L, l) == Approx(1.0 / ((l - L) * (l + n + L - 1.0))).epsilon(1e-12));
  CHECK_THROWS_AS(green_GL_closed(DimensionContext(9), 1, 0.0), UnsupportedError);
  CHECK_THROWS_AS(green_GL_closed(c3, 5, 0.0), UnsupportedError);
  CHECK_THROWS_AS(green_GL_integral(c3, 1, 1.0), SingularityError);
}

TEST_CASE("Green evaluators agree for every shipped pair") {
  for (int n = 2; n <= 8; ++n)
    for (int L = 1; L <= 4; ++L) {
      const DimensionContext c(n);
      for (double t : {-0.9, -0.4, 0.0, 0.35, 0.7}) {
        const double cl = green_GL_closed(c, L, t);
        CHECK(green_GL_integral(c, L, t) == Approx(cl).scale(1.0).epsilon(1e-6));
        CHECK(green_GL_series(c, L, t, 2000) == Approx(cl).scale(1.0).epsilon(1e-6));
      }
    }
}

TEST_CASE("G_0 is the Poisson kernel") {
  for (int n = 2; n <= 5; ++n) {
    const DimensionContext c(n);
    for (double t : {-0.8, 0.1, 0.6}) {
      CHECK(green_GL_closed(c, 0, t) == Approx(kernel_K_closed(c, t)).epsilon(1e-14));
      CHECK(green_GL_integral(c, 0, t) == Approx(kernel_K_integral(c, t)).scale(1.0).epsilon(1e-8));
    }
    for (int l = 0; l <= 8; ++l) CHECK(green_coefficient(c, 0, l) == Approx(kernel_coefficients(c, 8)[l].real()).epsilon(1e-15));
  }
}

TEST_CASE("resonant solver") {
  const DimensionContext c2(2), c3(3);
  const auto p = HelmholtzProblem::resonant(c2, 1);
  CHECK(p.a == cplx(2.0));
  const auto u = solve_resonant(p, ZonalFunction(c2, {0.0, 0.0, 1.0}));
  CHECK(u[2].real() == Approx(-0.25).epsilon(1e-15));
  try {
    solve_resonant(p, ZonalFunction(c2, {0.0, 1.0}));
    FAIL("expected a solvability error");
  } catch (const SolvabilityError& e) {
    CHECK(e.degree() == 1);
  }

  std::mt19937 g(7);
  const auto p3 = HelmholtzProblem::resonant(c3, 2);
  const auto f = without_degree(ZonalFunction(c3, oracle::random_coeffs(g, 16)), 2);
  const auto s = solve_resonant(p3, f);
  CHECK(s[2] == cplx(0.0));
  CHECK(helmholtz_residual(p3, s, f) < 1e-10);
  const auto cz = solve_resonant(p3, f, ResonantRoute::Convolution);
  CHECK(norm(cz - s) < 1e-13 * norm(s));
  for (auto m : {KernelMethod::Closed, KernelMethod::Integral}) {
    const auto ck = solve_resonant(p3, f, KernelEvaluator(c3, m, 2));
    CHECK(norm(ck - s) < 1e-6 * norm(s));
  }
  const auto gc = green_GL_coefficients(c3, 2, 6);
  CHECK(gc[2] == cplx(0.0));
  CHECK(gc[4].real() == Approx(-(1.0 + 4) / 1.0 / ((4 - 2) * (4 + 3 + 2 - 1.0))).epsilon(1e-15));
}

TEST_CASE("S^2 Helmholtz") {
  std::mt19937 g(8);
  std::normal_distribution<double> N;
  SphereSignalS2 f(8);
  for (auto& a : f.data()) a = cplx(N(g), N(g));
  const auto p = HelmholtzProblem::non_resonant(DimensionContext(2), 4.0);
  CHECK(helmholtz_residual(p, solve_helmholtz_spectral(p, f), f) < 1e-12);
  const auto pr = HelmholtzProblem::resonant(DimensionContext(2), 3);
  for (int m = -3; m <= 3; ++m) f(3, m) = 0.0;
  CHECK(helmholtz_residual(pr, solve_resonant(pr, f), f) < 1e-12);
}
