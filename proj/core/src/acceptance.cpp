#include "spherepde/acceptance.hpp"

#include "spherepde/closed_form.hpp"
#include "spherepde/derive.hpp"
#include "spherepde/errors.hpp"
#include "spherepde/helmholtz.hpp"
#include "spherepde/lemmas.hpp"
#include "spherepde/poisson.hpp"
#include "spherepde/quadrature.hpp"
#include "spherepde/wavelet.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>

namespace spherepde {

namespace {

std::string sci(double v) {
  std::ostringstream os;
  os.precision(2);
  os << std::scientific << v;
  return os.str();
}

std::vector<double> t_grid() {
  std::vector<double> t;
  for (int i = 0; i < 25; ++i) t.push_back(-0.95 + 1.75 * i / 24.0);
  return t;
}

ZonalFunction random_zonal(const DimensionContext& ctx, int L, std::mt19937& g, bool zero_mean) {
  std::normal_distribution<double> N;
  auto f = ZonalFunction::zero(ctx, L);
  for (int l = zero_mean ? 1 : 0; l <= L; ++l) f[l] = cplx(N(g), N(g));
  return f;
}

SphereSignalS2 random_s2(int L, std::mt19937& g) {
  std::normal_distribution<double> N;
  SphereSignalS2 f(L);
  for (int l = 1; l <= L; ++l)
    for (int m = -l; m <= l; ++m) f(l, m) = cplx(N(g), N(g));
  return f;
}

double rel_err(const ZonalFunction& a, const ZonalFunction& b) { return norm(a - b) / norm(b); }

CriterionResult table1() {
  CriterionResult r{1, "closed-form K vs integral oracle", true, "", 0.0};
  double worst = 0.0, worst_n2 = 0.0;
  for (int n = 2; n <= 10; ++n) {
    const DimensionContext ctx(n);
    for (double t : t_grid()) {
      const double oracle = kernel_K_integral(ctx, t);
      worst = std::max(worst, std::fabs(kernel_K_closed(ctx, t) - oracle));
      if (n == 2) worst_n2 = std::max(worst_n2, std::fabs(oracle - (1.0 + std::log((1.0 - t) / 2.0))));
    }
  }
  r.passed = worst <= 1e-6 && worst_n2 <= 1e-6;
  r.detail = "max |closed - integral| = " + sci(worst) + ", n=2 oracle vs 1+ln((1-t)/2) = " + sci(worst_n2);
  return r;
}

CriterionResult table2() {
  CriterionResult r{2, "closed-form G_L vs series vs integral", true, "", 0.0};
  double worst = 0.0;
  for (int n = 2; n <= 8; ++n) {
    const DimensionContext ctx(n);
    for (int L = 1; L <= 4; ++L)
      for (double t : t_grid()) {
        const double c = green_GL_closed(ctx, L, t);
        const double s = green_GL_series(ctx, L, t, 2000);
        const double i = green_GL_integral(ctx, L, t);
        worst = std::max({worst, std::fabs(c - s), std::fabs(c - i), std::fabs(s - i)});
      }
  }
  const double s1 = std::fabs(green_GL_closed(DimensionContext(3), 1, 0.0) - std::numbers::pi / 4);
  const double s2 = std::fabs(green_GL_closed(DimensionContext(3), 2, 0.0) + 1.0 / 12);
  const double s3 = std::fabs(green_GL_closed(DimensionContext(2), 1, 0.0) - 1.0);
  const double spot = std::max({s1, s2, s3});
  r.passed = worst <= 1e-6 && spot <= 1e-12;
  r.detail = "max pairwise difference = " + sci(worst) + ", spot values off by " + sci(spot);
  return r;
}

CriterionResult poisson() {
  CriterionResult r{3, "Poisson solver residuals", true, "", 0.0};
  std::mt19937 g(20240601);
  const int L = 24;
  double spectral = 0.0, grid = 0.0;
  const KernelEvaluator kernel(DimensionContext(2), KernelMethod::Integral);
  const GridGeometryS2 geo = make_grid_geometry(L);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + i % 4;
    if (n == 2) {
      const SphereSignalS2 f = random_s2(L, g);
      spectral = std::max(spectral, poisson_residual(solve_poisson(f), f));
      // grid route: samples in, samples out
      const GridS2 fg = s2_inverse(f, geo);
      const GridS2 ug = solve_poisson_grid(fg, L, kernel);
      grid = std::max(grid, poisson_residual(s2_forward(ug, L), f));
    } else {
      const ZonalFunction f = random_zonal(DimensionContext(n), L, g, true);
      spectral = std::max(spectral, poisson_residual(solve_poisson(f), f));
    }
  }
  r.passed = spectral <= 1e-10 && grid <= 1e-6;
  r.detail = "spectral residual " + sci(spectral) + ", n=2 grid route residual " + sci(grid);
  return r;
}

CriterionResult admissibility() {
  CriterionResult r{4, "Admissibility of the builtin families", true, "", 0.0};
  struct Case {
    std::string name;
    int d;
  };
  const std::vector<Case> cases{{"gauss-weierstrass", 1}, {"abel-poisson", 1}, {"poisson", 1}, {"poisson", 2},
                                {"poisson", 3},           {"theta-scaled", 1}, {"theta-scaled", 2}, {"theta-scaled", 3}};
  double worst = 0.0;
  std::string where;
  for (int n = 2; n <= 5; ++n)
    for (const auto& c : cases) {
      const WaveletFamily fam = builtin_family(c.name, DimensionContext(n), c.d);
      for (int l = 1; l <= 50; ++l) {
        const double e = std::fabs(admissibility_defect(fam, l) - 1.0);
        if (e > worst) {
          worst = e;
          where = c.name + " d=" + std::to_string(c.d) + " n=" + std::to_string(n) + " l=" + std::to_string(l);
        }
      }
    }
  r.passed = worst <= 1e-8;
  r.detail = "max |defect - 1| = " + sci(worst) + (where.empty() ? "" : " at " + where);
  return r;
}

CriterionResult bounds() {
  CriterionResult r{5, "Frame bounds of psi^d", true, "", 0.0};
  double worst = 0.0;
  for (int d = 1; d <= 2; ++d)
    for (int n = 2; n <= 5; ++n) {
      const FrameBounds fb = frame_bounds(builtin_family("psi", DimensionContext(n), d), 200);
      const double B = std::tgamma(2.0 * d) / std::pow(4.0, d);
      const double A = B / (static_cast<double>(n) * n);
      worst = std::max({worst, std::fabs(fb.A - A), std::fabs(fb.B - B)});
    }
  r.passed = worst <= 1e-8;
  r.detail = "max deviation from Gamma(2d)/(4^d n^2), Gamma(2d)/4^d = " + sci(worst);
  return r;
}

CriterionResult inversion() {
  CriterionResult r{6, "Abel-Poisson inversion round trip", true, "", 0.0};
  std::mt19937 g(77);
  const DimensionContext ctx(2);
  const WaveletFamily ap = builtin_family("abel-poisson", ctx);
  const ScaleGrid grid = ScaleGrid::log_spaced(1e-4, 20.0, 200);
  double sampled = 0.0, analytic = 0.0;
  for (int k = 0; k < 5; ++k) {
    // degree 0 is annihilated by the wavelet, so the signals have zero mean
    const ZonalFunction f = random_zonal(ctx, 20, g, true);
    sampled = std::max(sampled, rel_err(icwt(cwt(f, ap, grid), ap), f));
    analytic = std::max(analytic, rel_err(cwt_icwt_analytic(f, ap), f));
  }
  r.passed = sampled < 1e-3 && analytic < 1e-10;
  r.detail = "sampled scales " + sci(sampled) + " (need < 1e-3), analytic scale integrals " + sci(analytic);
  return r;
}

CriterionResult frame() {
  CriterionResult r{7, "Frame algorithm rate and Helmholtz wavelet route", true, "", 0.0};
  std::mt19937 g(11);
  // worst per-iteration error ratio above delta while the error is above roundoff
  double excess = -1.0;
  std::string where;
  auto track = [&](const ZonalFunction& target, double delta, const std::string& label) {
    auto prev = std::make_shared<double>(norm(target));
    const double floor = 1e-11 * *prev;
    return [&, target, delta, label, prev, floor](int, const ZonalFunction& fk) {
      const double e = norm(fk - target);
      if (*prev > floor && e > floor) {
        const double x = e / *prev - delta;
        if (x > excess) {
          excess = x;
          where = label;
        }
      }
      *prev = e;
    };
  };
  // psi^d on a discrete scale grid, target is the degreewise fixed point
  for (int d = 1; d <= 2; ++d)
    for (int n = 2; n <= 3; ++n) {
      const DimensionContext ctx(n);
      const WaveletFamily psi = builtin_family("psi", ctx, d);
      const ZonalFunction f = random_zonal(ctx, 20, g, true);
      const WaveletCoefficients W = cwt(f, psi, ScaleGrid::log_spaced(1e-4, 40.0, 400));
      FrameOptions fo;
      fo.iterations = 200;
      const FrameBounds fb = frame_bounds(psi, 20);
      const double delta = (fb.B - fb.A) / (fb.B + fb.A);
      fo.on_iterate = track(f, delta, "psi d=" + std::to_string(d) + " n=" + std::to_string(n));
      frame_reconstruct(W, psi, fo);
    }

  const DimensionContext ctx(2);
  const auto p = HelmholtzProblem::non_resonant(ctx, 5.5);
  const ZonalFunction f = random_zonal(ctx, 24, g, false);
  const ZonalFunction us = solve_helmholtz_spectral(p, f);
  ZonalFunction target = us;
  target[0] = 0.0;
  HelmholtzWaveletOptions ho;
  const FrameBounds hb = frame_bounds(builtin_family("helmholtz-theta", ctx, 1, p.a), 24);
  ho.on_iterate = track(target, (hb.B - hb.A) / (hb.B + hb.A), "helmholtz a=5.5");
  const HelmholtzWaveletResult hw = solve_helmholtz_wavelet(p, f, ho);
  const double herr = rel_err(hw.u, us);

  r.passed = excess <= 1e-3 && herr < 1e-6;
  r.detail = "max (ratio - delta) = " + sci(excess) + " (" + where + "), Helmholtz wavelet vs spectral " + sci(herr) +
             " (delta=" + std::to_string(hw.frame.delta) + ")";
  return r;
}

struct LemmaCase {
  std::string label;
  Expr antiderivative;
  Expr integrand;
};

CriterionResult symbolic() {
  CriterionResult r{8, "Symbolic lemmas and even-n derivation", true, "", 0.0};
  std::vector<LemmaCase> cases;
  for (int twice = 1; twice <= 11; twice += 2)
    cases.push_back({"lemma1 lambda=" + std::to_string(twice) + "/2", lemma1_antiderivative(Rational(twice, 2)),
                     lemma1_integrand(Rational(twice, 2))});
  for (int k = 0; k <= 9; ++k)
    for (int J = 0; J <= 5; ++J)
      cases.push_back({"lemma2 k=" + std::to_string(k) + " J=" + std::to_string(J), lemma2_I(k, J), lemma2_integrand(k, J)});
  for (int L = 0; L <= 8; ++L)
    for (int J = 0; J <= 5; ++J)
      cases.push_back({"lemma3 L=" + std::to_string(L) + " J=" + std::to_string(J), lemma3_calI(L, J), lemma3_integrand(L, J)});
  for (int k = 1; k <= 10; ++k)
    cases.push_back({"lemma4 k=" + std::to_string(k), lemma4_log_integral(k), lemma4_integrand(k)});
  cases.push_back({"log integral k=0", log_integral_k0(), lemma4_integrand(0)});

  std::mt19937 g(5);
  std::uniform_real_distribution<double> ut(-0.9, 0.9), uR(0.05, 0.95), uT(0.2, 2.0), uX(-1.5, 1.5);
  const QuadratureRule gl = gauss_legendre(40);
  double worst = 0.0;
  int exact_failures = 0;
  std::string where;
  for (const auto& c : cases) {
    if (!(c.antiderivative.derivative() - c.integrand).is_zero()) ++exact_failures;
    // fundamental theorem against composite Gauss-Legendre quadrature of the integrand
    const bool lemma2 = c.integrand.world() == World::Lemma2;
    const NumericExpr F(c.antiderivative), f(c.integrand);
    for (int i = 0; i < 50; ++i) {
      const double p = lemma2 ? uT(g) : ut(g);
      double a = lemma2 ? uX(g) : uR(g), b = lemma2 ? uX(g) : uR(g);
      if (a > b) std::swap(a, b);
      double want = 0.0;
      for (int k = 0; k < 8; ++k)
        want += gl.integrate([&](double x) { return f(x, p); }, a + (b - a) * k / 8, a + (b - a) * (k + 1) / 8);
      const double e = std::fabs(F(b, p) - F(a, p) - want) / std::max(1.0, std::fabs(want));
      if (e > worst) {
        worst = e;
        where = c.label;
      }
    }
  }
  bool derived = true;
  for (int n = 4; n <= 10; n += 2) derived = derived && derive_kernel_K_even(n) == table_kernel_K(n);
  const ClosedFormZonal example(RationalPoly{Rational(1)}, RationalPoly{Rational(1)}, RationalPoly{Rational(1)}, {}, 0);
  derived = derived && derive_kernel_K_even(2) == example;

  r.passed = worst <= 1e-10 && exact_failures == 0 && derived;
  r.detail = std::to_string(cases.size()) + " lemma cases x 50 intervals, max relative residual vs quadrature " + sci(worst) + " (" +
             where + "), exact failures " + std::to_string(exact_failures) + ", derivation n=2..10 " +
             (derived ? "matches" : "differs");
  return r;
}

CriterionResult identity() {
  CriterionResult r{9, "Scalar identity behind the G_L representation", true, "", 0.0};
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n)
    for (int l = 1; l <= 10; ++l)
      for (int L = 0; L < l; ++L) {
        const double exact = 1.0 / ((l - L) * (l + n + L - 1.0));
        worst = std::max(worst, std::fabs(green_identity_integral(n, L, l) - exact));
      }
  r.passed = worst <= 1e-12;
  r.detail = "max deviation " + sci(worst);
  return r;
}

}  // namespace

CriterionResult run_criterion(int id) {
  static const std::vector<std::function<CriterionResult()>> checks{table1,    table2, poisson, admissibility, bounds,
                                                                    inversion, frame,  symbolic, identity};
  if (id < 1 || id > static_cast<int>(checks.size())) throw DomainError("criteria are numbered 1..9");
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = checks[static_cast<size_t>(id - 1)]();
  } catch (const std::exception& e) {
    r.id = id;
    r.passed = false;
    r.detail = std::string("threw: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (id == 1 && r.seconds >= 60.0) r.passed = false;
  if (id == 2 && r.seconds >= 300.0) r.passed = false;
  return r;
}

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 9; ++id) out.push_back(run_criterion(id));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os.precision(3);
  os << (r.passed ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.name << ": " << r.detail << " (" << std::fixed
     << r.seconds << "s)";
  return os.str();
}

}  // namespace spherepde
