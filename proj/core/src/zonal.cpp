#include "spherepde/zonal.hpp"

#include "spherepde/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace spherepde {

namespace {

void require_same(const ZonalFunction& a, const ZonalFunction& b) {
  if (a.ctx() != b.ctx())
    throw MismatchError("zonal functions live on different spheres (n=" + std::to_string(a.ctx().n()) +
                        " vs n=" + std::to_string(b.ctx().n()) + ")");
}

}  // namespace

ZonalFunction::ZonalFunction(DimensionContext ctx, std::vector<cplx> coeffs)
    : ctx_(ctx), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("zonal function needs at least one coefficient");
  for (const auto& c : coeffs_)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw DomainError("zonal coefficients must be finite");
}

ZonalFunction ZonalFunction::zero(DimensionContext ctx, int L) {
  if (L < 0) throw DomainError("bandlimit must be >= 0");
  return ZonalFunction(ctx, std::vector<cplx>(static_cast<size_t>(L) + 1));
}

cplx zonal_eval(const ZonalFunction& f, double t) {
  if (!(std::fabs(t) <= 1.0)) throw DomainError("t must lie in [-1, 1]");
  const double lam = f.ctx().lambda();
  const int L = f.bandlimit();
  // C_{k+1} = alpha_k C_k + beta_k C_{k-1}
  auto alpha = [&](int k) { return 2.0 * t * (k + lam) / (k + 1.0); };
  auto beta = [&](int k) { return -(k + 2.0 * lam - 1.0) / (k + 1.0); };
  cplx b1 = 0.0, b2 = 0.0;
  for (int k = L; k >= 1; --k) {
    cplx b0 = f[k] + alpha(k) * b1 + beta(k + 1) * b2;
    b2 = b1;
    b1 = b0;
  }
  const double c1 = 2.0 * lam * t;
  return f[0] + beta(1) * b2 + c1 * b1;
}

ZonalFunction zonal_convolve(const ZonalFunction& f, const ZonalFunction& h) {
  require_same(f, h);
  const int L = std::min(f.bandlimit(), h.bandlimit());
  const double lam = f.ctx().lambda();
  ZonalFunction out = ZonalFunction::zero(f.ctx(), L);
  for (int l = 0; l <= L; ++l) out[l] = lam / (lam + l) * f[l] * h[l];
  return out;
}

ZonalFunction laplace_beltrami(const ZonalFunction& f) {
  ZonalFunction out = f;
  for (int l = 0; l <= f.bandlimit(); ++l) out[l] *= f.ctx().eigenvalue(l);
  return out;
}

double gegenbauer_norm_sq(const DimensionContext& ctx, int l) {
  const double lam = ctx.lambda();
  return lam / (lam + l) * gegenbauer_at_one(l, lam);
}

cplx inner_product(const ZonalFunction& f, const ZonalFunction& g) {
  require_same(f, g);
  const int L = std::min(f.bandlimit(), g.bandlimit());
  cplx s = 0.0;
  for (int l = 0; l <= L; ++l) s += std::conj(f[l]) * g[l] * gegenbauer_norm_sq(f.ctx(), l);
  return s;
}

double norm(const ZonalFunction& f) { return std::sqrt(std::max(0.0, inner_product(f, f).real())); }

ZonalFunction reproducing_kernel(const DimensionContext& ctx, int l, int L) {
  if (l < 0 || L < l) throw DomainError("reproducing kernel needs 0 <= l <= L");
  ZonalFunction k = ZonalFunction::zero(ctx, L);
  k[l] = ctx.kernel_weight(l);
  return k;
}

ZonalFunction operator+(const ZonalFunction& a, const ZonalFunction& b) {
  require_same(a, b);
  const ZonalFunction& big = a.bandlimit() >= b.bandlimit() ? a : b;
  const ZonalFunction& small = a.bandlimit() >= b.bandlimit() ? b : a;
  ZonalFunction out = big;
  for (int l = 0; l <= small.bandlimit(); ++l) out[l] += small[l];
  return out;
}

ZonalFunction operator*(cplx s, const ZonalFunction& a) {
  ZonalFunction out = a;
  for (auto& c : out.coeffs()) c *= s;
  return out;
}

ZonalFunction operator-(const ZonalFunction& a, const ZonalFunction& b) { return a + cplx(-1.0) * b; }

}  // namespace spherepde
