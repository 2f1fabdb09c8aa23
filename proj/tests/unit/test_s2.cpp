#include "oracles.hpp"
#include "spherepde/errors.hpp"
#include "spherepde/s2.hpp"

#include <doctest.h>

#include <boost/math/special_functions/spherical_harmonic.hpp>

#include <cmath>
#include <numbers>
#include <random>

using namespace spherepde;
using doctest::Approx;

namespace {

SphereSignalS2 random_signal(std::mt19937& g, int L) {
  std::normal_distribution<double> N;
  SphereSignalS2 s(L);
  for (auto& a : s.data()) a = cplx(N(g), N(g));
  return s;
}

double max_diff(const SphereSignalS2& a, const SphereSignalS2& b) {
  double m = 0.0;
  for (int l = 0; l <= std::min(a.bandlimit(), b.bandlimit()); ++l)
    for (int k = -l; k <= l; ++k) m = std::max(m, std::abs(a(l, k) - b(l, k)));
  return m;
}

// Boost carries the Condon-Shortley phase and unit-sphere normalization.
cplx boost_y(int l, int m, double th, double ph) {
  return ((m % 2) ? -1.0 : 1.0) * std::sqrt(4 * std::numbers::pi) * boost::math::spherical_harmonic(l, m, th, ph);
}

}  // namespace

TEST_CASE("spherical harmonics match Boost up to phase and normalization") {
  for (int l = 0; l <= 12; ++l)
    for (int m = -l; m <= l; ++m)
      for (double th : {0.1, 1.0, 2.5})
        for (double ph : {0.0, 0.7, 4.0}) {
          const cplx ref = boost_y(l, m, th, ph);
          CHECK(std::abs(spherical_harmonic(l, m, th, ph) - ref) < 1e-12 * (1 + std::abs(ref)));
        }
  CHECK_THROWS_AS(spherical_harmonic(2, 3, 0.1, 0.1), DomainError);
}

TEST_CASE("forward and inverse transforms round trip") {
  std::mt19937 g(1);
  for (int L : {0, 1, 5, 16, 31}) {
    const auto sig = random_signal(g, L);
    const auto geom = make_grid_geometry(L);
    const auto back = s2_forward(s2_inverse(sig, geom), L);
    CHECK(max_diff(sig, back) < 1e-11);
  }
}

TEST_CASE("inverse transform samples the harmonic series") {
  std::mt19937 g(2);
  const int L = 6;
  const auto sig = random_signal(g, L);
  const auto grid = s2_inverse(sig, make_grid_geometry(L, 1));
  for (int i = 0; i < grid.geometry.ntheta(); i += 2)
    for (int j = 0; j < grid.geometry.nphi(); j += 3) {
      cplx ref = 0.0;
      for (int l = 0; l <= L; ++l)
        for (int m = -l; m <= l; ++m)
          ref += sig(l, m) * boost_y(l, m, grid.geometry.theta[static_cast<size_t>(i)], grid.geometry.phi[static_cast<size_t>(j)]);
      CHECK(std::abs(grid.at(i, j) - ref) < 1e-11 * (1 + std::abs(ref)));
    }
}

TEST_CASE("constant and zonal inputs") {
  const auto geom = make_grid_geometry(4);
  GridS2 grid{geom, std::vector<cplx>(static_cast<size_t>(geom.ntheta() * geom.nphi()), 1.0)};
  const auto sig = s2_forward(grid, 4);
  CHECK(std::abs(sig(0, 0) - 1.0) < 1e-13);
  for (int l = 1; l <= 4; ++l)
    for (int m = -l; m <= l; ++m) CHECK(std::abs(sig(l, m)) < 1e-13);

  std::mt19937 g(4);
  const ZonalFunction z(DimensionContext(2), oracle::random_coeffs(g, 8));
  const auto zs = s2_from_zonal(z);
  for (int l = 0; l <= 8; ++l)
    for (int m = -l; m <= l; ++m)
      if (m != 0) CHECK(zs(l, m) == cplx(0.0));
  const auto zs2 = s2_forward(s2_inverse(zs, make_grid_geometry(8)), 8);
  for (int l = 0; l <= 8; ++l) CHECK(std::abs(s2_zonal_part(zs2)[l] - z[l]) < 1e-12);
  // zonal evaluation along the meridian
  const auto grid2 = s2_inverse(zs, make_grid_geometry(8));
  for (int i = 0; i < grid2.geometry.ntheta(); ++i) {
    const cplx ref = oracle::zonal_naive(z.coeffs(), 0.5, std::cos(grid2.geometry.theta[static_cast<size_t>(i)]));
    CHECK(std::abs(grid2.at(i, 3) - ref) < 1e-11 * (1 + std::abs(ref)));
  }
  CHECK_THROWS_AS(s2_from_zonal(ZonalFunction(DimensionContext(3), {1.0})), MismatchError);
}

TEST_CASE("Parseval and inner products") {
  std::mt19937 g(6);
  const int L = 10;
  const auto f = random_signal(g, L), h = random_signal(g, L);
  const auto geom = make_grid_geometry(L, 2);
  const auto gf = s2_inverse(f, geom), gh = s2_inverse(h, geom);
  cplx quad = 0.0;
  double energy = 0.0;
  for (int i = 0; i < geom.ntheta(); ++i)
    for (int j = 0; j < geom.nphi(); ++j) {
      const double w = geom.weights[static_cast<size_t>(i)] / (2.0 * geom.nphi());
      quad += w * std::conj(gf.at(i, j)) * gh.at(i, j);
      energy += w * std::norm(gf.at(i, j));
    }
  CHECK(std::abs(inner_product(f, h) - quad) < 1e-11 * std::abs(quad));
  CHECK(norm(f) * norm(f) == Approx(energy).epsilon(1e-12));
}

TEST_CASE("Laplace-Beltrami, convolution and resolution checks") {
  std::mt19937 g(8);
  const auto f = random_signal(g, 6), h = random_signal(g, 6);
  const auto lf = laplace_beltrami(f);
  for (int l = 0; l <= 6; ++l)
    for (int m = -l; m <= l; ++m) CHECK(lf(l, m) == f(l, m) * (-double(l) * (l + 1)));
  CHECK(std::abs(inner_product(lf, h) - inner_product(f, laplace_beltrami(h))) < 1e-10 * std::abs(inner_product(lf, h)));

  const ZonalFunction k(DimensionContext(2), oracle::random_coeffs(g, 6));
  const auto c = convolve(f, k);
  for (int l = 0; l <= 6; ++l)
    for (int m = -l; m <= l; ++m) CHECK(std::abs(c(l, m) - f(l, m) * k[l] * (0.5 / (0.5 + l))) < 1e-14 * (1 + std::abs(c(l, m))));
  CHECK_THROWS_AS(convolve(f, ZonalFunction(DimensionContext(3), {1.0})), MismatchError);

  const auto geom = make_grid_geometry(4);
  CHECK(geom.max_bandlimit() == 4);
  CHECK_THROWS_AS(s2_forward(GridS2{geom, std::vector<cplx>(3)}, 4), MismatchError);
  CHECK_THROWS_AS(s2_forward(GridS2{geom, std::vector<cplx>(static_cast<size_t>(geom.ntheta() * geom.nphi()))}, 5), ResolutionError);
}
