#include "spherepde/helmholtz.hpp"

#include "spherepde/closed_form.hpp"
#include "spherepde/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace spherepde {

HelmholtzProblem HelmholtzProblem::non_resonant(const DimensionContext& ctx, cplx a) {
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) throw DomainError("a must be finite");
  return HelmholtzProblem{ctx, a, std::nullopt};
}

HelmholtzProblem HelmholtzProblem::resonant(const DimensionContext& ctx, int L) {
  if (L < 0) throw DomainError("L must be >= 0");
  return HelmholtzProblem{ctx, cplx(-ctx.eigenvalue(L), 0.0), L};
}

int HelmholtzProblem::nearest_degree() const {
  if (resonant_L) return *resonant_L;
  // l(l+n-1) = Re a has the root l* = (-(n-1) + sqrt((n-1)^2 + 4 Re a))/2
  const double n1 = ctx.n() - 1.0;
  const double disc = n1 * n1 + 4.0 * std::max(0.0, a.real());
  const int l0 = std::max(0, static_cast<int>(std::floor(0.5 * (-n1 + std::sqrt(disc)))));
  int best = l0;
  for (int l = std::max(0, l0 - 1); l <= l0 + 2; ++l)
    if (std::abs(a + ctx.eigenvalue(l)) < std::abs(a + ctx.eigenvalue(best))) best = l;
  return best;
}

namespace {

cplx helmholtz_divisor(const HelmholtzProblem& p, int l) { return p.a + p.ctx.eigenvalue(l); }

bool is_resonant(const HelmholtzProblem& p, int l) {
  return std::abs(helmholtz_divisor(p, l)) <= 1e-12 * std::max(1.0, std::abs(p.a));
}

[[noreturn]] void throw_resonance(const HelmholtzProblem& p, int l) {
  throw ResonanceError("a is an eigenvalue: resonance at degree " + std::to_string(l) + " (l(l+n-1) = " +
                           std::to_string(static_cast<long long>(-p.ctx.eigenvalue(l))) + ")",
                       l);
}

void check_resonant_problem(const HelmholtzProblem& p) {
  if (!p.resonant_L) throw DomainError("problem has no resonant degree; use the spectral solver");
}

}  // namespace

ZonalFunction solve_helmholtz_spectral(const HelmholtzProblem& p, const ZonalFunction& f) {
  if (p.ctx != f.ctx()) throw MismatchError("problem and signal live on different spheres");
  auto u = ZonalFunction::zero(f.ctx(), f.bandlimit());
  for (int l = 0; l <= f.bandlimit(); ++l) {
    if (f[l] == cplx(0.0)) continue;
    if (is_resonant(p, l)) throw_resonance(p, l);
    u[l] = f[l] / helmholtz_divisor(p, l);
  }
  return u;
}

SphereSignalS2 solve_helmholtz_spectral(const HelmholtzProblem& p, const SphereSignalS2& f) {
  if (p.ctx.n() != 2) throw MismatchError("harmonic signals are defined for n = 2 only");
  SphereSignalS2 u(f.bandlimit());
  for (int l = 0; l <= f.bandlimit(); ++l)
    for (int m = -l; m <= l; ++m) {
      if (f(l, m) == cplx(0.0)) continue;
      if (is_resonant(p, l)) throw_resonance(p, l);
      u(l, m) = f(l, m) / helmholtz_divisor(p, l);
    }
  return u;
}

HelmholtzWaveletResult solve_helmholtz_wavelet(const HelmholtzProblem& p, const ZonalFunction& f,
                                               const HelmholtzWaveletOptions& opts) {
  if (p.ctx != f.ctx()) throw MismatchError("problem and signal live on different spheres");
  const int L = f.bandlimit();
  for (int l = 0; l <= L; ++l)
    if (f[l] != cplx(0.0) && is_resonant(p, l)) throw_resonance(p, l);

  const WaveletFamily psi = builtin_family("poisson-raw", p.ctx, opts.d);
  const WaveletFamily theta = builtin_family("helmholtz-theta", p.ctx, opts.d, p.a);
  WaveletCoefficients W = cwt(f, psi, opts.scales);
  for (size_t s = 0; s < W.scales.size(); ++s) {
    const double r2 = W.scales.rho[s] * W.scales.rho[s];
    W.per_scale[s] = cplx(r2) * W.per_scale[s];
  }
  W.family = theta.name();

  FrameOptions fo;
  fo.iterations = opts.iterations;
  fo.relaxation = opts.relaxation;
  fo.on_iterate = opts.on_iterate;
  const FrameBounds fb = frame_bounds(theta, std::max(L, 1));
  if (!(fb.A > 1e-14 * fb.B)) {
    const int l = p.nearest_degree();
    throw ResonanceError("frame bounds degenerate (A=" + std::to_string(fb.A) + "): a is close to the eigenvalue " +
                             std::to_string(static_cast<long long>(-p.ctx.eigenvalue(l))) + " of degree " +
                             std::to_string(l),
                         l);
  }
  fo.bounds = std::make_pair(fb.A, fb.B);
  FrameResult fr = frame_reconstruct(W, theta, fo);

  HelmholtzWaveletResult res{fr.f, fr};
  if (f[0] != cplx(0.0)) res.u[0] = f[0] / helmholtz_divisor(p, 0);
  return res;
}

double green_GL_series(const DimensionContext& ctx, int L, double t, int l_max, const SeriesOptions& opts) {
  return green_series(ctx, L, t, l_max, opts);
}

double green_GL_integral(const DimensionContext& ctx, int L, double t) { return green_integral(ctx, L, t); }

double green_GL_closed(const DimensionContext& ctx, int L, double t) {
  return table_green_GL(ctx.n(), L).eval(t);
}

ZonalFunction green_GL_coefficients(const DimensionContext& ctx, int L, int band) {
  auto g = ZonalFunction::zero(ctx, band);
  for (int l = 0; l <= band; ++l) g[l] = green_coefficient(ctx, L, l);
  return g;
}

namespace {

void check_solvable(const HelmholtzProblem& p, cplx fL, double fnorm) {
  const int L = *p.resonant_L;
  if (std::abs(fL) > 1e-12 * fnorm)
    throw SolvabilityError("right-hand side has a component in the resonant degree " + std::to_string(L), L);
}

}  // namespace

ZonalFunction solve_resonant(const HelmholtzProblem& p, const ZonalFunction& f, ResonantRoute route) {
  check_resonant_problem(p);
  if (p.ctx != f.ctx()) throw MismatchError("problem and signal live on different spheres");
  const int L = *p.resonant_L;
  if (L <= f.bandlimit()) check_solvable(p, f[L], norm(f));
  if (route == ResonantRoute::Convolution) {
    auto u = zonal_convolve(f, green_GL_coefficients(f.ctx(), L, f.bandlimit()));
    return u;
  }
  auto u = ZonalFunction::zero(f.ctx(), f.bandlimit());
  const int n = f.ctx().n();
  for (int l = 0; l <= f.bandlimit(); ++l)
    if (l != L) u[l] = -f[l] / (static_cast<double>(l - L) * (l + n + L - 1.0));
  return u;
}

ZonalFunction solve_resonant(const HelmholtzProblem& p, const ZonalFunction& f, const KernelEvaluator& kernel) {
  check_resonant_problem(p);
  if (p.ctx != f.ctx() || kernel.ctx != f.ctx()) throw MismatchError("problem and signal live on different spheres");
  if (kernel.L != *p.resonant_L) throw MismatchError("kernel evaluator is built for a different L");
  const int L = *p.resonant_L;
  if (L <= f.bandlimit()) check_solvable(p, f[L], norm(f));
  return zonal_convolve(f, project_kernel(kernel, f.bandlimit()));
}

SphereSignalS2 solve_resonant(const HelmholtzProblem& p, const SphereSignalS2& f) {
  check_resonant_problem(p);
  if (p.ctx.n() != 2) throw MismatchError("harmonic signals are defined for n = 2 only");
  const int L = *p.resonant_L;
  if (L <= f.bandlimit()) {
    double part = 0.0;
    for (int m = -L; m <= L; ++m) part += std::norm(f(L, m));
    check_solvable(p, std::sqrt(part), norm(f));
  }
  SphereSignalS2 u(f.bandlimit());
  for (int l = 0; l <= f.bandlimit(); ++l) {
    if (l == L) continue;
    const double den = static_cast<double>(l - L) * (l + L + 1.0);
    for (int m = -l; m <= l; ++m) u(l, m) = -f(l, m) / den;
  }
  return u;
}

double helmholtz_residual(const HelmholtzProblem& p, const ZonalFunction& u, const ZonalFunction& f) {
  return norm(laplace_beltrami(u) + p.a * u - f) / norm(f);
}

double helmholtz_residual(const HelmholtzProblem& p, const SphereSignalS2& u, const SphereSignalS2& f) {
  return norm(laplace_beltrami(u) + p.a * u - f) / norm(f);
}

}  // namespace spherepde
