#pragma once

#include "spherepde/special.hpp"

#include <complex>
#include <vector>

namespace spherepde {

using cplx = std::complex<double>;

/// Rotation-invariant function g(t) = sum_l ghat(l) C_l^lambda(t), truncated at degree L.
class ZonalFunction {
 public:
  ZonalFunction(DimensionContext ctx, std::vector<cplx> coeffs);
  /// All-zero function of bandlimit L.
  static ZonalFunction zero(DimensionContext ctx, int L);

  const DimensionContext& ctx() const { return ctx_; }
  int bandlimit() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  std::vector<cplx>& coeffs() { return coeffs_; }
  cplx operator[](int l) const { return coeffs_[static_cast<size_t>(l)]; }
  cplx& operator[](int l) { return coeffs_[static_cast<size_t>(l)]; }

 private:
  DimensionContext ctx_;
  std::vector<cplx> coeffs_;
};

/// Clenshaw summation of the Gegenbauer series.
cplx zonal_eval(const ZonalFunction& f, double t);
/// (f * h)^(l) = lambda/(lambda + l) fhat(l) hhat(l), truncated at the smaller bandlimit.
ZonalFunction zonal_convolve(const ZonalFunction& f, const ZonalFunction& h);
/// Multiplies degree l by -l(l + n - 1).
ZonalFunction laplace_beltrami(const ZonalFunction& f);
/// <f, g> = (1/Sigma_n) int conj(f) g, computed from coefficients.
cplx inner_product(const ZonalFunction& f, const ZonalFunction& g);
double norm(const ZonalFunction& f);
/// <C_l, C_l> = lambda/(lambda + l) C_l(1).
double gegenbauer_norm_sq(const DimensionContext& ctx, int l);
/// ((lambda + l)/lambda) C_l^lambda as a zonal function of bandlimit L >= l.
ZonalFunction reproducing_kernel(const DimensionContext& ctx, int l, int L);

ZonalFunction operator+(const ZonalFunction& a, const ZonalFunction& b);
ZonalFunction operator-(const ZonalFunction& a, const ZonalFunction& b);
ZonalFunction operator*(cplx s, const ZonalFunction& a);

}  // namespace spherepde
