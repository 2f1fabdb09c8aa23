#include "oracles.hpp"
#include "spherepde/errors.hpp"
#include "spherepde/wavelet.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace spherepde;
using doctest::Approx;

namespace {

// sum_l |c_l|^2 <C_l, C_l> computed independently of the library.
double energy(const ZonalFunction& f) {
  double s = 0.0;
  const double lam = f.ctx().lambda();
  for (int l = 0; l <= f.bandlimit(); ++l) s += std::norm(f[l]) * lam / (lam + l) * gegenbauer_at_one(l, lam);
  return s;
}

// int_0^inf |Psi_rho(l)|^2 drho/rho by Boost quadrature on the raw rule.
double scale_integral_oracle(const WaveletFamily& fam, int l) {
  const double a = oracle::integrate([&](double r) { return std::norm(fam(r, l)) / r; }, 0.0, 1.0 / l);
  const double b = oracle::integrate([&](double r) { return std::norm(fam(r, l)) / r; }, 1.0 / l, 60.0 / l);
  return a + b;
}

}  // namespace

TEST_CASE("builtin coefficient rules") {
  for (int n = 2; n <= 5; ++n) {
    const DimensionContext c(n);
    const double lam = c.lambda();
    for (int d = 1; d <= 3; ++d) {
      const auto psi = builtin_family("psi", c, d), theta = builtin_family("theta", c, d);
      for (double rho : {0.01, 0.3, 2.0})
        for (int l = 1; l <= 20; ++l) {
          const cplx lhs = theta(rho, l), rhs = rho * rho * c.eigenvalue(l) * psi(rho, l);
          CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(rhs));
          const double k = (lam + l) / lam;
          CHECK(std::abs(psi(rho, l) - std::pow(rho, d) * std::pow(l, d + 1) / (l + n - 1.0) * std::exp(-rho * l) * k) <=
                1e-14 * std::abs(psi(rho, l)));
        }
      const auto h0 = builtin_family("helmholtz-theta", c, 1, 0.0);
      for (int l = 1; l <= 10; ++l) {
        const double rho = 0.4, k = (lam + l) / lam, e = std::exp(-l * rho);
        const double ref = -std::pow(l * rho, 3) * e * k - rho * (n - 1) * std::pow(l * rho, 2) * e * k;
        CHECK(h0(rho, l).real() == Approx(ref).epsilon(1e-13));
      }
    }
    for (const auto& name : builtin_family_names())
      for (double rho : {0.1, 1.0}) CHECK(builtin_family(name, c, 2, cplx(1.5, 0.5))(rho, 0) == cplx(0.0));
  }
  CHECK_THROWS_AS(builtin_family("morlet", DimensionContext(2)), UnsupportedError);
  CHECK_THROWS_AS(builtin_family("psi", DimensionContext(2), 0), DomainError);
}

TEST_CASE("admissibility defects") {
  CHECK(admissibility_defect(builtin_family("abel-poisson", DimensionContext(2)), 4) == Approx(1.0).epsilon(1e-10));
  CHECK(admissibility_defect(builtin_family("poisson", DimensionContext(3), 1), 5) == Approx(1.0).epsilon(1e-10));
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d <= 3; ++d) {
      const auto ts = builtin_family("theta-scaled", DimensionContext(n), d);
      for (int l = 1; l <= 40; ++l) CHECK(admissibility_defect(ts, l) == Approx(1.0).epsilon(1e-10));
    }
  // analytic gamma forms against numerical quadrature of the raw rule
  for (const auto& name : builtin_family_names()) {
    const auto fam = builtin_family(name, DimensionContext(3), 2, 1.5);
    for (int l : {1, 4, 17}) CHECK(scale_integral(fam, l) == Approx(scale_integral_oracle(fam, l)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(admissibility_defect(builtin_family("psi", DimensionContext(2)), 0), DomainError);
}

TEST_CASE("frame bounds") {
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d <= 3; ++d) {
      const auto fb = frame_bounds(builtin_family("psi", DimensionContext(n), d), 200);
      const double B = std::tgamma(2.0 * d) / std::pow(4.0, d);
      CHECK(fb.A >= B / (n * n) * (1 - 1e-12));
      CHECK(fb.B == Approx(B).epsilon(1e-12));
    }
  const auto ap = frame_bounds(builtin_family("abel-poisson", DimensionContext(4)), 50);
  CHECK(ap.A == Approx(1.0).epsilon(1e-12));
  CHECK(ap.B == Approx(1.0).epsilon(1e-12));
  // helmholtz theta per-degree value for real a
  const int n = 3, d = 1;
  const double a = 5.5;
  const auto ht = builtin_family("helmholtz-theta", DimensionContext(n), d, a);
  for (int l = 1; l <= 20; ++l) {
    const double ref = std::tgamma(2.0 * d + 4) / std::pow(2.0, 2 * (d + 2)) * std::pow(l * (l + n - 1.0) - a, 2) / std::pow(l, 4);
    CHECK(admissibility_defect(ht, l) == Approx(ref).epsilon(1e-10));
  }
}

TEST_CASE("scale grid") {
  const auto g = ScaleGrid::log_spaced(1e-3, 10.0, 50);
  double w = 0.0;
  for (double x : g.weight) w += x;
  CHECK(w == Approx(std::log(1e4)).epsilon(1e-13));
  CHECK(g.rho.front() == Approx(1e-3));
  CHECK(g.rho.back() == 10.0);
  CHECK_THROWS_AS(ScaleGrid::log_spaced(1.0, 0.5, 10), DomainError);
  CHECK_THROWS_AS(ScaleGrid::log_spaced(0.1, 1.0, 1), DomainError);
}

TEST_CASE("cwt coefficients") {
  const DimensionContext c(3);
  const auto fam = builtin_family("poisson", c, 2);
  const auto grid = ScaleGrid::log_spaced(1e-3, 10.0, 40);
  const auto W0 = cwt(ZonalFunction(c, {1.0, 0.0, 0.0}), fam, grid);
  for (const auto& z : W0.per_scale)
    for (const auto& x : z.coeffs()) CHECK(x == cplx(0.0));
  CHECK(W0.lost_degrees == std::vector<int>{0});

  const int l = 5;
  std::vector<cplx> e(9, 0.0);
  e[l] = 1.0;
  const auto W = cwt(ZonalFunction(c, e), fam, grid);
  for (size_t s = 0; s < grid.size(); ++s)
    for (int k = 0; k <= 8; ++k) {
      const cplx ref = k == l ? c.lambda() / (c.lambda() + l) * std::conj(fam(grid.rho[s], l)) : cplx(0.0);
      CHECK(std::abs(W.per_scale[s][k] - ref) < 1e-15 * (1 + std::abs(ref)));
    }
}

TEST_CASE("frame inequality for psi families") {
  std::mt19937 g(21);
  const auto grid = ScaleGrid::log_spaced(1e-5, 60.0, 800);
  for (int n = 2; n <= 5; ++n) {
    const auto fam = builtin_family("psi", DimensionContext(n), 1);
    const auto fb = frame_bounds(fam, 30);
    for (int trial = 0; trial < 25; ++trial) {
      const ZonalFunction f(DimensionContext(n), oracle::random_coeffs(g, 30, true));
      const auto W = cwt(f, fam, grid);
      double wn = 0.0;
      for (size_t s = 0; s < grid.size(); ++s) wn += grid.weight[s] * energy(W.per_scale[s]);
      CHECK(wn >= fb.A * energy(f) * (1 - 1e-4));
      CHECK(wn <= fb.B * energy(f) * (1 + 1e-4));
    }
  }
}

TEST_CASE("inversion") {
  const DimensionContext c(2);
  const auto ap = builtin_family("abel-poisson", c);
  const auto grid = ScaleGrid::log_spaced(1e-4, 20.0, 200);
  const auto zero = icwt(cwt(ZonalFunction::zero(c, 10), ap, grid), ap);
  for (const auto& x : zero.coeffs()) CHECK(x == cplx(0.0));

  std::mt19937 g(2);
  const ZonalFunction f(c, oracle::random_coeffs(g, 20, true));
  const auto exact = cwt_icwt_analytic(f, ap);
  for (int l = 1; l <= 20; ++l) CHECK(std::abs(exact[l] - f[l]) < 1e-12 * std::abs(f[l]));
  for (int l = 1; l <= 50; ++l) CHECK(cwt_icwt_multiplier(ap, l) == Approx(1.0).epsilon(1e-12));

  const auto back = icwt(cwt(f, ap, grid), ap);
  CHECK(norm(back - f) / norm(f) < 1e-2);

  CHECK_THROWS(icwt(cwt(f, builtin_family("poisson-raw", c, 2), grid), builtin_family("poisson-raw", c, 2)));
}

TEST_CASE("frame algorithm") {
  const DimensionContext c(2);
  std::mt19937 g(4);
  const ZonalFunction f(c, oracle::random_coeffs(g, 16, true));
  const auto grid = ScaleGrid::log_spaced(1e-4, 40.0, 400);

  // tight frame, relaxation 1/A: one step
  const auto ap = builtin_family("abel-poisson", c);
  FrameOptions one;
  one.iterations = 1;
  const auto r1 = frame_reconstruct(cwt(f, ap, grid), ap, one);
  CHECK(r1.delta == Approx(0.0).scale(1.0).epsilon(1e-12));

  const auto psi = builtin_family("psi", c, 1);
  const auto W = cwt(f, psi, grid);
  // fixed point of the discrete iteration is division by the discrete multiplier
  ZonalFunction fixed = ZonalFunction::zero(c, 16);
  const auto ts = synthesize(W, psi);
  for (int l = 1; l <= 16; ++l) {
    const double m = admissibility_defect(psi, l, grid);
    fixed[l] = ts[l] / m;
  }
  std::vector<double> errs;
  FrameOptions opts;
  opts.iterations = 60;
  opts.on_iterate = [&](int, const ZonalFunction& fk) { errs.push_back(norm(fk - fixed)); };
  const auto r = frame_reconstruct(W, psi, opts);
  REQUIRE(errs.size() == 60);
  double prev = norm(fixed);
  for (size_t k = 0; k < errs.size(); ++k) {
    if (errs[k] < 1e-12 * norm(fixed)) break;
    CHECK(errs[k] <= (r.delta + 1e-3) * prev * (1 + 1e-9));
    prev = errs[k];
  }
  CHECK(norm(r.f - fixed) <= 1e-9 * norm(fixed));
  CHECK(norm(r.f - f) / norm(f) < 1e-3);
  CHECK(r.error_bound == Approx(std::pow(r.delta, 60)));

  FrameOptions bad;
  bad.relaxation = 10.0 / r.B;
  CHECK_THROWS_AS(frame_reconstruct(W, psi, bad), DomainError);
}

TEST_CASE("transform relation for Laplace-Beltrami pairs") {
  std::mt19937 g(13);
  const auto grid = ScaleGrid::log_spaced(1e-3, 10.0, 30);
  for (int n = 2; n <= 5; ++n) {
    const DimensionContext c(n);
    const ZonalFunction u(c, oracle::random_coeffs(g, 15));
    const auto f = laplace_beltrami(u);
    for (int d = 1; d <= 2; ++d) {
      const auto Wf = cwt(f, builtin_family("psi", c, d), grid);
      const auto Wu = cwt(u, builtin_family("theta", c, d), grid);
      for (size_t s = 0; s < grid.size(); ++s)
        for (int l = 0; l <= 15; ++l) {
          const cplx lhs = grid.rho[s] * grid.rho[s] * Wf.per_scale[s][l];
          CHECK(std::abs(lhs - Wu.per_scale[s][l]) <= 1e-12 * (1e-300 + std::abs(lhs)));
        }
    }
  }
}

TEST_CASE("S^2 pipeline matches the zonal pipeline on axisymmetric input") {
  std::mt19937 g(17);
  const DimensionContext c(2);
  const ZonalFunction f(c, oracle::random_coeffs(g, 10, true));
  const auto fam = builtin_family("poisson", c, 1);
  const auto grid = ScaleGrid::log_spaced(1e-3, 10.0, 25);
  const auto Wz = cwt(f, fam, grid);
  const auto Ws = cwt(s2_from_zonal(f), fam, grid);
  for (size_t s = 0; s < grid.size(); ++s) {
    const auto back = s2_zonal_part(Ws.per_scale[s]);
    for (int l = 0; l <= 10; ++l) CHECK(std::abs(back[l] - Wz.per_scale[s][l]) < 1e-12 * (1 + std::abs(Wz.per_scale[s][l])));
  }
  const auto rs = icwt(Ws, fam);
  const auto rz = icwt(Wz, fam);
  const auto rz2 = s2_zonal_part(rs);
  for (int l = 0; l <= 10; ++l) CHECK(std::abs(rz2[l] - rz[l]) < 1e-12 * (1 + std::abs(rz[l])));
}
