#pragma once

// Full harmonic analysis on the ordinary sphere (n = 2). The basis is
// Y_l^m = sqrt((2l+1)(l-m)!/(l+m)!) P_l^m(cos theta) e^{i m phi} for m >= 0 and
// Y_l^{-m} = (-1)^m conj(Y_l^m); it is orthonormal for <f,g> = (1/4pi) int conj(f) g.

#include "spherepde/zonal.hpp"

#include <vector>

namespace spherepde {

/// Coefficients a_l^m, 0 <= l <= L, -l <= m <= l.
class SphereSignalS2 {
 public:
  explicit SphereSignalS2(int L);
  int bandlimit() const { return L_; }
  static size_t index(int l, int m) { return static_cast<size_t>(l * l + l + m); }
  cplx operator()(int l, int m) const { return a_[index(l, m)]; }
  cplx& operator()(int l, int m) { return a_[index(l, m)]; }
  const std::vector<cplx>& data() const { return a_; }
  std::vector<cplx>& data() { return a_; }

 private:
  int L_;
  std::vector<cplx> a_;
};

/// Sample geometry: Gauss-Legendre colatitudes and uniform longitudes.
struct GridGeometryS2 {
  std::vector<double> theta;
  std::vector<double> weights;  // Gauss-Legendre weights in cos(theta)
  std::vector<double> phi;
  int ntheta() const { return static_cast<int>(theta.size()); }
  int nphi() const { return static_cast<int>(phi.size()); }
  /// Largest bandlimit whose products this grid integrates exactly.
  int max_bandlimit() const;
};

/// Geometry with ntheta = L + 1 + extra and nphi = 2L + 1 + 2 extra.
GridGeometryS2 make_grid_geometry(int L, int extra = 0);

/// Samples f(theta_i, phi_j), row-major in theta.
struct GridS2 {
  GridGeometryS2 geometry;
  std::vector<cplx> samples;
  cplx& at(int i, int j) { return samples[static_cast<size_t>(i * geometry.nphi() + j)]; }
  cplx at(int i, int j) const { return samples[static_cast<size_t>(i * geometry.nphi() + j)]; }
};

/// Normalized associated Legendre values q_l^m(x) for m <= l <= L at fixed m.
std::vector<double> normalized_legendre(int L, int m, double x);
cplx spherical_harmonic(int l, int m, double theta, double phi);

SphereSignalS2 s2_forward(const GridS2& grid, int L);
GridS2 s2_inverse(const SphereSignalS2& sig, const GridGeometryS2& geometry);

/// Axisymmetric embedding of a zonal function: a_l^0 = fhat(l)/sqrt(2l+1).
SphereSignalS2 s2_from_zonal(const ZonalFunction& f);
/// Zonal part (m = 0 column) back as Gegenbauer coefficients.
ZonalFunction s2_zonal_part(const SphereSignalS2& sig);

SphereSignalS2 laplace_beltrami(const SphereSignalS2& f);
cplx inner_product(const SphereSignalS2& f, const SphereSignalS2& g);
double norm(const SphereSignalS2& f);
/// Funk-Hecke: convolution with a zonal kernel multiplies degree l by lambda/(lambda+l) hhat(l).
SphereSignalS2 convolve(const SphereSignalS2& f, const ZonalFunction& h);

SphereSignalS2 operator-(const SphereSignalS2& a, const SphereSignalS2& b);
SphereSignalS2 operator+(const SphereSignalS2& a, const SphereSignalS2& b);
SphereSignalS2 operator*(cplx s, const SphereSignalS2& a);

}  // namespace spherepde
