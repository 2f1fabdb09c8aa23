#include "spherepde/wavelet.hpp"

#include "spherepde/errors.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace spherepde {

double GammaForm::scale_integral() const {
  // int |sum c_i rho^{p_i} e^{-q rho}|^2 drho/rho = sum_ij c_i conj(c_j) Gamma(s)/(2q)^s, s = p_i + p_j
  double total = 0.0;
  for (const auto& a : terms)
    for (const auto& b : terms) {
      const double s = a.p + b.p;
      total += (a.c * std::conj(b.c)).real() * std::exp(std::lgamma(s) - s * std::log(2.0 * q));
    }
  return total;
}

WaveletFamily::WaveletFamily(std::string name, DimensionContext ctx, int order, Rule rule)
    : name_(std::move(name)), ctx_(ctx), order_(order), rule_(std::move(rule)) {
  if (order < -1) throw DomainError("wavelet order must be >= -1");
}

cplx WaveletFamily::operator()(double rho, int l) const {
  if (!(rho > 0.0)) throw DomainError("wavelet scale must be positive");
  if (l <= order_) return 0.0;
  return rule_(rho, l);
}

WaveletFamily& WaveletFamily::with_gamma_form(GammaRule g) {
  gamma_ = std::move(g);
  return *this;
}

WaveletFamily& WaveletFamily::with_asymptotic_defect(double v) {
  asymptotic_ = v;
  return *this;
}

WaveletFamily& WaveletFamily::with_analytic_bounds(double A, double B) {
  bounds_ = std::make_pair(A, B);
  return *this;
}

GammaForm WaveletFamily::gamma_form(int l) const {
  if (!gamma_) throw UnsupportedError("family '" + name_ + "' has no closed scale form");
  return gamma_(l);
}

namespace {

// Builds a family whose degree-l coefficient is sum_i c_i(l) rho^{p_i} e^{-q(l) rho}.
WaveletFamily gamma_family(const std::string& name, const DimensionContext& ctx,
                           std::function<GammaForm(int)> form) {
  auto rule = [form](double rho, int l) {
    GammaForm g = form(l);
    cplx v = 0.0;
    for (const auto& t : g.terms) v += t.c * std::pow(rho, t.p);
    return v * std::exp(-g.q * rho);
  };
  WaveletFamily fam(name, ctx, 0, rule);
  fam.with_gamma_form(form);
  return fam;
}

void require_d(int d, const std::string& name) {
  if (d < 1) throw DomainError("family '" + name + "' needs d >= 1");
}

}  // namespace

WaveletFamily builtin_family(const std::string& name, const DimensionContext& ctx, int d, cplx a) {
  const double lam = ctx.lambda();
  const int n = ctx.n();
  auto k = [lam](int l) { return (lam + l) / lam; };

  if (name == "gauss-weierstrass") {
    auto fam = gamma_family(name, ctx, [k, lam](int l) {
      const double q = l * (l + 2.0 * lam);
      return GammaForm{q, {{std::sqrt(2.0 * q) * k(l), 0.5}}};
    });
    return fam.with_asymptotic_defect(1.0);
  }
  if (name == "abel-poisson") {
    auto fam = gamma_family(name, ctx, [k](int l) {
      return GammaForm{static_cast<double>(l), {{std::sqrt(2.0 * l) * k(l), 0.5}}};
    });
    return fam.with_asymptotic_defect(1.0);
  }
  if (name == "poisson") {
    require_d(d, name);
    const double c = std::pow(2.0, d) / std::sqrt(std::tgamma(2.0 * d));
    auto fam = gamma_family(name, ctx, [k, c, d](int l) {
      return GammaForm{static_cast<double>(l), {{c * std::pow(l, d) * k(l), static_cast<double>(d)}}};
    });
    return fam.with_asymptotic_defect(1.0);
  }
  if (name == "poisson-raw") {
    require_d(d, name);
    auto fam = gamma_family(name, ctx, [k, d](int l) {
      return GammaForm{static_cast<double>(l), {{std::pow(l, d) * k(l), static_cast<double>(d)}}};
    });
    return fam.with_asymptotic_defect(std::tgamma(2.0 * d) / std::pow(4.0, d));
  }
  if (name == "psi") {
    require_d(d, name);
    auto fam = gamma_family(name, ctx, [k, d, n](int l) {
      return GammaForm{static_cast<double>(l),
                       {{std::pow(l, d + 1) / (l + n - 1.0) * k(l), static_cast<double>(d)}}};
    });
    const double B = std::tgamma(2.0 * d) / std::pow(4.0, d);
    fam.with_asymptotic_defect(B);
    return fam.with_analytic_bounds(B / (static_cast<double>(n) * n), B);
  }
  if (name == "theta") {
    require_d(d, name);
    auto fam = gamma_family(name, ctx, [k, d](int l) {
      return GammaForm{static_cast<double>(l), {{-std::pow(l, d + 2) * k(l), d + 2.0}}};
    });
    return fam.with_asymptotic_defect(std::tgamma(2.0 * d + 4.0) / std::pow(2.0, 2 * d + 4));
  }
  if (name == "theta-scaled") {
    require_d(d, name);
    const double s = -std::pow(2.0, d + 2) / std::sqrt(std::tgamma(2.0 * d + 4.0));
    auto fam = gamma_family(name, ctx, [k, d, s](int l) {
      return GammaForm{static_cast<double>(l), {{-s * std::pow(l, d + 2) * k(l), d + 2.0}}};
    });
    return fam.with_asymptotic_defect(1.0);
  }
  if (name == "helmholtz-theta") {
    require_d(d, name);
    // -Psi^{d+2} - rho (n-1) Psi^{d+1} + rho^2 conj(a) Psi^d with Psi^d = (l rho)^d e^{-l rho} k
    const cplx ca = std::conj(a);
    auto fam = gamma_family(name, ctx, [k, d, n, ca](int l) {
      const double p = d + 2.0;
      return GammaForm{static_cast<double>(l),
                       {{-std::pow(l, d + 2) * k(l), p},
                        {-(n - 1.0) * std::pow(l, d + 1) * k(l), p},
                        {ca * std::pow(l, d) * k(l), p}}};
    });
    return fam.with_asymptotic_defect(std::tgamma(2.0 * d + 4.0) / std::pow(2.0, 2 * d + 4));
  }
  throw UnsupportedError("unknown wavelet family '" + name + "'");
}

std::vector<std::string> builtin_family_names() {
  return {"gauss-weierstrass", "abel-poisson", "poisson", "poisson-raw",
          "psi",               "theta",        "theta-scaled", "helmholtz-theta"};
}

ScaleGrid ScaleGrid::log_spaced(double rho_min, double rho_max, int count) {
  if (count < 2) throw DomainError("scale grid needs at least two scales");
  if (!(rho_min > 0.0 && rho_max > rho_min)) throw DomainError("scale grid needs 0 < min < max");
  ScaleGrid g;
  const double a = std::log(rho_min);
  const double h = (std::log(rho_max) - a) / (count - 1);
  for (int s = 0; s < count; ++s) {
    g.rho.push_back(s == count - 1 ? rho_max : std::exp(a + h * s));
    g.weight.push_back((s == 0 || s == count - 1) ? 0.5 * h : h);
  }
  return g;
}

double scale_integral(const WaveletFamily& fam, int l) {
  if (l <= fam.order()) return 0.0;
  if (fam.has_gamma_form()) return fam.gamma_form(l).scale_integral();
  boost::math::quadrature::exp_sinh<double> integrator;
  auto f = [&](double rho) { return std::norm(fam(rho, l)) / rho; };
  double v = integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-12);
  if (!std::isfinite(v)) throw ConvergenceError("scale integral did not converge for l=" + std::to_string(l));
  return v;
}

double scale_integral(const WaveletFamily& fam, int l, const ScaleGrid& grid) {
  double s = 0.0;
  for (size_t i = 0; i < grid.size(); ++i) s += grid.weight[i] * std::norm(fam(grid.rho[i], l));
  return s;
}

double admissibility_defect(const WaveletFamily& fam, int l) {
  if (l <= fam.order()) throw DomainError("admissibility is only defined above the family order");
  const double k = fam.ctx().kernel_weight(l);
  return scale_integral(fam, l) / (k * k);
}

double admissibility_defect(const WaveletFamily& fam, int l, const ScaleGrid& grid) {
  if (l <= fam.order()) throw DomainError("admissibility is only defined above the family order");
  const double k = fam.ctx().kernel_weight(l);
  return scale_integral(fam, l, grid) / (k * k);
}

FrameBounds frame_bounds(const WaveletFamily& fam, int l_max) {
  if (l_max < fam.order() + 1) throw DomainError("frame_bounds needs l_max > order");
  FrameBounds b;
  b.A = std::numeric_limits<double>::infinity();
  b.B = -std::numeric_limits<double>::infinity();
  for (int l = std::max(fam.order() + 1, 0); l <= l_max; ++l) {
    if (l == 0) continue;
    const double v = admissibility_defect(fam, l);
    if (v < b.A) {
      b.A = v;
      b.argmin = l;
    }
    if (v > b.B) {
      b.B = v;
      b.argmax = l;
    }
  }
  if (auto lim = fam.asymptotic_defect()) {
    if (*lim < b.A) {
      b.A = *lim;
      b.argmin = -1;
    }
    if (*lim > b.B) {
      b.B = *lim;
      b.argmax = -1;
    }
  }
  return b;
}

namespace {

void check_grid(const ScaleGrid& g) {
  if (g.size() == 0) throw DomainError("empty scale grid");
}

}  // namespace

WaveletCoefficients cwt(const ZonalFunction& f, const WaveletFamily& fam, const ScaleGrid& scales) {
  check_grid(scales);
  if (f.ctx() != fam.ctx()) throw MismatchError("signal and wavelet family live on different spheres");
  const double lam = f.ctx().lambda();
  WaveletCoefficients W{fam.name(), scales, {}, {}};
  for (int l = 0; l <= std::min(fam.order(), f.bandlimit()); ++l)
    if (f[l] != cplx(0.0)) W.lost_degrees.push_back(l);
  for (size_t s = 0; s < scales.size(); ++s) {
    ZonalFunction w = ZonalFunction::zero(f.ctx(), f.bandlimit());
    for (int l = 0; l <= f.bandlimit(); ++l)
      w[l] = lam / (lam + l) * std::conj(fam(scales.rho[s], l)) * f[l];
    W.per_scale.push_back(std::move(w));
  }
  return W;
}

WaveletCoefficientsS2 cwt(const SphereSignalS2& f, const WaveletFamily& fam, const ScaleGrid& scales) {
  check_grid(scales);
  if (fam.ctx().n() != 2) throw MismatchError("S2 transform needs an n = 2 family");
  WaveletCoefficientsS2 W{fam.name(), scales, {}, {}};
  for (int l = 0; l <= std::min(fam.order(), f.bandlimit()); ++l)
    for (int m = -l; m <= l; ++m)
      if (f(l, m) != cplx(0.0)) {
        W.lost_degrees.push_back(l);
        break;
      }
  for (size_t s = 0; s < scales.size(); ++s) {
    ZonalFunction kernel = ZonalFunction::zero(fam.ctx(), f.bandlimit());
    for (int l = 0; l <= f.bandlimit(); ++l) kernel[l] = std::conj(fam(scales.rho[s], l));
    W.per_scale.push_back(convolve(f, kernel));
  }
  return W;
}

namespace {

void check_admissible(const WaveletFamily& fam, int L, const ScaleGrid& grid, const InversionOptions& opts) {
  for (int l = std::max(fam.order() + 1, 1); l <= L; ++l) {
    const double d = admissibility_defect(fam, l);
    if (std::fabs(d - 1.0) > opts.admissibility_tol)
      throw DomainError("family '" + fam.name() + "' is not admissible at degree " + std::to_string(l) +
                        " (defect " + std::to_string(d) + ")");
    if (opts.tail_tol >= 0.0) {
      const double g = admissibility_defect(fam, l, grid);
      if (std::fabs(g - d) > opts.tail_tol * d)
        throw DomainError("scale grid too narrow: degree " + std::to_string(l) + " misses a fraction " +
                          std::to_string(std::fabs(g - d) / d) + " of the scale integral");
    }
  }
}

}  // namespace

ZonalFunction synthesize(const WaveletCoefficients& W, const WaveletFamily& fam) {
  if (W.per_scale.empty() || W.per_scale.size() != W.scales.size())
    throw DomainError("wavelet coefficients do not match their scale grid");
  const auto& ctx = W.per_scale.front().ctx();
  const double lam = ctx.lambda();
  const int L = W.per_scale.front().bandlimit();
  ZonalFunction f = ZonalFunction::zero(ctx, L);
  for (int l = 0; l <= L; ++l) {
    cplx acc = 0.0;
    for (size_t s = 0; s < W.scales.size(); ++s)
      acc += W.scales.weight[s] * fam(W.scales.rho[s], l) * W.per_scale[s][l];
    f[l] = lam / (lam + l) * acc;
  }
  return f;
}

ZonalFunction icwt(const WaveletCoefficients& W, const WaveletFamily& fam, const InversionOptions& opts) {
  if (W.per_scale.empty()) throw DomainError("empty scale grid");
  check_admissible(fam, W.per_scale.front().bandlimit(), W.scales, opts);
  return synthesize(W, fam);
}

SphereSignalS2 icwt(const WaveletCoefficientsS2& W, const WaveletFamily& fam, const InversionOptions& opts) {
  if (W.per_scale.empty() || W.per_scale.size() != W.scales.size())
    throw DomainError("wavelet coefficients do not match their scale grid");
  const int L = W.per_scale.front().bandlimit();
  check_admissible(fam, L, W.scales, opts);
  SphereSignalS2 out(L);
  for (size_t s = 0; s < W.scales.size(); ++s) {
    ZonalFunction kernel = ZonalFunction::zero(fam.ctx(), L);
    for (int l = 0; l <= L; ++l) kernel[l] = W.scales.weight[s] * fam(W.scales.rho[s], l);
    out = out + convolve(W.per_scale[s], kernel);
  }
  return out;
}

double cwt_icwt_multiplier(const WaveletFamily& fam, int l) {
  if (l <= fam.order()) return 0.0;
  const double r = fam.ctx().lambda() / (fam.ctx().lambda() + l);
  return r * r * scale_integral(fam, l);
}

ZonalFunction cwt_icwt_analytic(const ZonalFunction& f, const WaveletFamily& fam) {
  ZonalFunction out = f;
  for (int l = 0; l <= f.bandlimit(); ++l) out[l] *= cwt_icwt_multiplier(fam, l);
  return out;
}

FrameResult frame_reconstruct(const WaveletCoefficients& W, const WaveletFamily& fam, const FrameOptions& opts) {
  if (W.per_scale.empty()) throw DomainError("empty scale grid");
  if (opts.iterations < 0) throw DomainError("iteration count must be >= 0");
  const auto& ctx = W.per_scale.front().ctx();
  const int L = W.per_scale.front().bandlimit();
  const double lam = ctx.lambda();

  double A, B;
  if (opts.bounds) {
    A = opts.bounds->first;
    B = opts.bounds->second;
  } else {
    FrameBounds fb = frame_bounds(fam, std::max(L, fam.order() + 1));
    A = fb.A;
    B = fb.B;
  }
  if (!(A > 0.0) || !(B >= A))
    throw DomainError("degenerate frame bounds A=" + std::to_string(A) + " B=" + std::to_string(B));
  const double relax = opts.relaxation.value_or(2.0 / (A + B));
  if (!(relax > 0.0 && relax < 2.0 / B))
    throw DomainError("relaxation must lie in (0, 2/B)");

  // T*T acts on degree l as m_l; T*W is the synthesized data
  std::vector<double> m(static_cast<size_t>(L) + 1);
  for (int l = 0; l <= L; ++l) {
    const double r = lam / (lam + l);
    m[static_cast<size_t>(l)] = r * r * scale_integral(fam, l, W.scales);
  }
  const ZonalFunction rhs = synthesize(W, fam);

  FrameResult res{ZonalFunction::zero(ctx, L), A, B, relax, 0.0, 0.0, opts.iterations};
  res.delta = std::max(std::fabs(1.0 - relax * A), std::fabs(1.0 - relax * B));
  for (int k = 1; k <= opts.iterations; ++k) {
    for (int l = 0; l <= L; ++l) {
      cplx& u = res.f[l];
      u += relax * (rhs[l] - m[static_cast<size_t>(l)] * u);
      if (!std::isfinite(u.real()) || !std::isfinite(u.imag()))
        throw ConvergenceError("frame iteration produced a non-finite iterate");
    }
    if (opts.on_iterate) opts.on_iterate(k, res.f);
  }
  res.error_bound = std::pow(res.delta, opts.iterations);
  return res;
}

}  // namespace spherepde
