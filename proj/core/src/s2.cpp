#include "spherepde/s2.hpp"

#include "spherepde/errors.hpp"
#include "spherepde/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace spherepde {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

SphereSignalS2::SphereSignalS2(int L) : L_(L) {
  if (L < 0) throw DomainError("bandlimit must be >= 0");
  a_.assign(static_cast<size_t>((L + 1) * (L + 1)), cplx(0.0));
}

int GridGeometryS2::max_bandlimit() const { return std::min(ntheta() - 1, (nphi() - 1) / 2); }

GridGeometryS2 make_grid_geometry(int L, int extra) {
  if (L < 0 || extra < 0) throw DomainError("grid needs L >= 0 and extra >= 0");
  GridGeometryS2 g;
  QuadratureRule q = gauss_legendre(L + 1 + extra);
  // colatitude ascending means cos(theta) descending
  for (int i = q.order - 1; i >= 0; --i) {
    g.theta.push_back(std::acos(q.nodes[static_cast<size_t>(i)]));
    g.weights.push_back(q.weights[static_cast<size_t>(i)]);
  }
  const int nphi = 2 * L + 1 + 2 * extra;
  for (int j = 0; j < nphi; ++j) g.phi.push_back(2.0 * kPi * j / nphi);
  return g;
}

std::vector<double> normalized_legendre(int L, int m, double x) {
  if (m < 0 || m > L) throw DomainError("normalized_legendre needs 0 <= m <= L");
  std::vector<double> q(static_cast<size_t>(L + 1), 0.0);
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
  double qmm = 1.0;
  for (int k = 1; k <= m; ++k) qmm *= std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * s;
  q[static_cast<size_t>(m)] = qmm;
  if (m + 1 <= L) q[static_cast<size_t>(m + 1)] = std::sqrt(2.0 * m + 3.0) * x * qmm;
  for (int l = m + 2; l <= L; ++l) {
    const double a = std::sqrt((4.0 * l * l - 1.0) / (static_cast<double>(l) * l - static_cast<double>(m) * m));
    const double b = std::sqrt(((l - 1.0) * (l - 1.0) - static_cast<double>(m) * m) /
                               (4.0 * (l - 1.0) * (l - 1.0) - 1.0));
    q[static_cast<size_t>(l)] = a * (x * q[static_cast<size_t>(l - 1)] - b * q[static_cast<size_t>(l - 2)]);
  }
  return q;
}

cplx spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) throw DomainError("spherical harmonic needs |m| <= l");
  const int am = std::abs(m);
  double q = normalized_legendre(l, am, std::cos(theta))[static_cast<size_t>(l)];
  cplx y = q * std::polar(1.0, am * phi);
  if (m < 0) y = (am % 2 ? -1.0 : 1.0) * std::conj(y);
  return y;
}

SphereSignalS2 s2_forward(const GridS2& grid, int L) {
  const auto& g = grid.geometry;
  if (L < 0) throw DomainError("bandlimit must be >= 0");
  if (g.ntheta() < L + 1 || g.nphi() < 2 * L + 1)
    throw ResolutionError("grid " + std::to_string(g.ntheta()) + "x" + std::to_string(g.nphi()) +
                          " cannot resolve bandlimit " + std::to_string(L));
  if (grid.samples.size() != static_cast<size_t>(g.ntheta() * g.nphi()))
    throw MismatchError("sample count does not match grid geometry");
  SphereSignalS2 out(L);
  const int nphi = g.nphi();
  std::vector<cplx> ring(static_cast<size_t>(2 * L + 1));
  for (int i = 0; i < g.ntheta(); ++i) {
    // ring Fourier coefficients F(m) = (2pi/nphi) sum_j f_ij e^{-i m phi_j}
    for (int m = -L; m <= L; ++m) {
      cplx s = 0.0;
      for (int j = 0; j < nphi; ++j) s += grid.at(i, j) * std::polar(1.0, -m * g.phi[static_cast<size_t>(j)]);
      ring[static_cast<size_t>(m + L)] = s * (2.0 * kPi / nphi);
    }
    const double x = std::cos(g.theta[static_cast<size_t>(i)]);
    const double w = g.weights[static_cast<size_t>(i)] / (4.0 * kPi);
    for (int m = 0; m <= L; ++m) {
      auto q = normalized_legendre(L, m, x);
      const double sign = (m % 2) ? -1.0 : 1.0;
      for (int l = m; l <= L; ++l) {
        out(l, m) += w * q[static_cast<size_t>(l)] * ring[static_cast<size_t>(m + L)];
        if (m > 0) out(l, -m) += sign * w * q[static_cast<size_t>(l)] * ring[static_cast<size_t>(-m + L)];
      }
    }
  }
  return out;
}

GridS2 s2_inverse(const SphereSignalS2& sig, const GridGeometryS2& geometry) {
  const int L = sig.bandlimit();
  if (geometry.ntheta() < L + 1 || geometry.nphi() < 2 * L + 1)
    throw ResolutionError("grid too coarse for bandlimit " + std::to_string(L));
  GridS2 grid{geometry, std::vector<cplx>(static_cast<size_t>(geometry.ntheta() * geometry.nphi()))};
  std::vector<cplx> ring(static_cast<size_t>(2 * L + 1));
  for (int i = 0; i < geometry.ntheta(); ++i) {
    const double x = std::cos(geometry.theta[static_cast<size_t>(i)]);
    std::fill(ring.begin(), ring.end(), cplx(0.0));
    for (int m = 0; m <= L; ++m) {
      auto q = normalized_legendre(L, m, x);
      const double sign = (m % 2) ? -1.0 : 1.0;
      for (int l = m; l <= L; ++l) {
        ring[static_cast<size_t>(m + L)] += sig(l, m) * q[static_cast<size_t>(l)];
        if (m > 0) ring[static_cast<size_t>(-m + L)] += sign * sig(l, -m) * q[static_cast<size_t>(l)];
      }
    }
    for (int j = 0; j < geometry.nphi(); ++j) {
      cplx s = 0.0;
      for (int m = -L; m <= L; ++m) s += ring[static_cast<size_t>(m + L)] * std::polar(1.0, m * geometry.phi[static_cast<size_t>(j)]);
      grid.at(i, j) = s;
    }
  }
  return grid;
}

SphereSignalS2 s2_from_zonal(const ZonalFunction& f) {
  if (f.ctx().n() != 2) throw MismatchError("s2_from_zonal needs n = 2");
  SphereSignalS2 out(f.bandlimit());
  for (int l = 0; l <= f.bandlimit(); ++l) out(l, 0) = f[l] / std::sqrt(2.0 * l + 1.0);
  return out;
}

ZonalFunction s2_zonal_part(const SphereSignalS2& sig) {
  ZonalFunction f = ZonalFunction::zero(DimensionContext(2), sig.bandlimit());
  for (int l = 0; l <= sig.bandlimit(); ++l) f[l] = sig(l, 0) * std::sqrt(2.0 * l + 1.0);
  return f;
}

SphereSignalS2 laplace_beltrami(const SphereSignalS2& f) {
  SphereSignalS2 out = f;
  for (int l = 0; l <= f.bandlimit(); ++l)
    for (int m = -l; m <= l; ++m) out(l, m) *= -static_cast<double>(l) * (l + 1);
  return out;
}

cplx inner_product(const SphereSignalS2& f, const SphereSignalS2& g) {
  const int L = std::min(f.bandlimit(), g.bandlimit());
  cplx s = 0.0;
  for (int l = 0; l <= L; ++l)
    for (int m = -l; m <= l; ++m) s += std::conj(f(l, m)) * g(l, m);
  return s;
}

double norm(const SphereSignalS2& f) { return std::sqrt(std::max(0.0, inner_product(f, f).real())); }

SphereSignalS2 convolve(const SphereSignalS2& f, const ZonalFunction& h) {
  if (h.ctx().n() != 2) throw MismatchError("S2 convolution needs an n = 2 kernel");
  const int L = std::min(f.bandlimit(), h.bandlimit());
  SphereSignalS2 out(L);
  for (int l = 0; l <= L; ++l) {
    const cplx s = h[l] * (0.5 / (0.5 + l));
    for (int m = -l; m <= l; ++m) out(l, m) = s * f(l, m);
  }
  return out;
}

SphereSignalS2 operator+(const SphereSignalS2& a, const SphereSignalS2& b) {
  const SphereSignalS2& big = a.bandlimit() >= b.bandlimit() ? a : b;
  const SphereSignalS2& small = a.bandlimit() >= b.bandlimit() ? b : a;
  SphereSignalS2 out = big;
  for (size_t i = 0; i < small.data().size(); ++i) out.data()[i] += small.data()[i];
  return out;
}

SphereSignalS2 operator*(cplx s, const SphereSignalS2& a) {
  SphereSignalS2 out = a;
  for (auto& c : out.data()) c *= s;
  return out;
}

SphereSignalS2 operator-(const SphereSignalS2& a, const SphereSignalS2& b) { return a + cplx(-1.0) * b; }

}  // namespace spherepde
