#pragma once

#include "spherepde/s2.hpp"
#include "spherepde/zonal.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace spherepde {

/// One term c rho^p of a coefficient rule sum_i c_i rho^{p_i} e^{-q rho}.
struct GammaTerm {
  cplx c;
  double p;
};

/// Degree-l coefficient in closed "gamma" shape; lets the scale integral
/// int_0^inf |Psi_rho(l)|^2 drho/rho be done exactly.
struct GammaForm {
  double q = 0.0;
  std::vector<GammaTerm> terms;
  double scale_integral() const;
};

class WaveletFamily {
 public:
  using Rule = std::function<cplx(double rho, int l)>;
  using GammaRule = std::function<GammaForm(int l)>;

  WaveletFamily(std::string name, DimensionContext ctx, int order, Rule rule);

  const std::string& name() const { return name_; }
  const DimensionContext& ctx() const { return ctx_; }
  /// Coefficients vanish for l <= order (-1: none forced).
  int order() const { return order_; }
  cplx operator()(double rho, int l) const;

  WaveletFamily& with_gamma_form(GammaRule g);
  WaveletFamily& with_asymptotic_defect(double v);
  WaveletFamily& with_analytic_bounds(double A, double B);

  bool has_gamma_form() const { return static_cast<bool>(gamma_); }
  GammaForm gamma_form(int l) const;
  /// Limit of the admissibility defect as l -> infinity, when known.
  std::optional<double> asymptotic_defect() const { return asymptotic_; }
  std::optional<std::pair<double, double>> analytic_bounds() const { return bounds_; }

 private:
  std::string name_;
  DimensionContext ctx_;
  int order_;
  Rule rule_;
  GammaRule gamma_;
  std::optional<double> asymptotic_;
  std::optional<std::pair<double, double>> bounds_;
};

/// Names: gauss-weierstrass, abel-poisson, poisson (d), poisson-raw (d),
/// psi (d), theta (d), theta-scaled (d), helmholtz-theta (d, a).
WaveletFamily builtin_family(const std::string& name, const DimensionContext& ctx, int d = 1,
                             cplx a = 0.0);
std::vector<std::string> builtin_family_names();

/// Log-spaced scales with trapezoid weights for drho/rho.
struct ScaleGrid {
  std::vector<double> rho;
  std::vector<double> weight;
  static ScaleGrid log_spaced(double rho_min, double rho_max, int count);
  size_t size() const { return rho.size(); }
};

/// int_0^inf |Psi_rho(l)|^2 drho/rho: exact for gamma forms, otherwise
/// double-exponential quadrature.
double scale_integral(const WaveletFamily& fam, int l);
/// Trapezoid approximation on the grid.
double scale_integral(const WaveletFamily& fam, int l, const ScaleGrid& grid);

/// Scale integral divided by ((lambda + l)/lambda)^2.
double admissibility_defect(const WaveletFamily& fam, int l);
double admissibility_defect(const WaveletFamily& fam, int l, const ScaleGrid& grid);

struct FrameBounds {
  double A = 0.0;
  double B = 0.0;
  int argmin = -1;  // degree attaining A, -1 if only approached asymptotically
  int argmax = -1;
};

/// inf/sup of the defect over order < l <= l_max, widened by the l -> inf limit if known.
FrameBounds frame_bounds(const WaveletFamily& fam, int l_max);

struct WaveletCoefficients {
  std::string family;
  ScaleGrid scales;
  std::vector<ZonalFunction> per_scale;
  /// Nonzero input degrees at or below the family order; the transform loses them.
  std::vector<int> lost_degrees;
};

struct WaveletCoefficientsS2 {
  std::string family;
  ScaleGrid scales;
  std::vector<SphereSignalS2> per_scale;
  std::vector<int> lost_degrees;
};

/// (W f)(rho, .)^(l) = lambda/(lambda + l) conj(Psi_rho(l)) fhat(l).
WaveletCoefficients cwt(const ZonalFunction& f, const WaveletFamily& fam, const ScaleGrid& scales);
WaveletCoefficientsS2 cwt(const SphereSignalS2& f, const WaveletFamily& fam, const ScaleGrid& scales);

struct InversionOptions {
  /// Required closeness of the analytic defect to 1 on the carried degrees.
  double admissibility_tol = 1e-6;
  /// Largest tolerated relative deficit of the discretized scale integral on
  /// any carried degree; negative disables the check.
  double tail_tol = -1.0;
};

/// Direct inversion fhat(l) = sum_s w_s lambda/(lambda+l) Psi_{rho_s}(l) (W f)(rho_s)^(l).
ZonalFunction icwt(const WaveletCoefficients& W, const WaveletFamily& fam, const InversionOptions& opts = {});
SphereSignalS2 icwt(const WaveletCoefficientsS2& W, const WaveletFamily& fam, const InversionOptions& opts = {});

/// Degreewise multiplier of cwt followed by icwt with the scale integral done exactly.
double cwt_icwt_multiplier(const WaveletFamily& fam, int l);
/// f passed through analysis and synthesis with exact scale integrals.
ZonalFunction cwt_icwt_analytic(const ZonalFunction& f, const WaveletFamily& fam);

/// Adjoint of the analysis operator, T* W.
ZonalFunction synthesize(const WaveletCoefficients& W, const WaveletFamily& fam);

struct FrameOptions {
  int iterations = 100;
  std::optional<double> relaxation;                 // default 2/(A+B)
  std::optional<std::pair<double, double>> bounds;  // default frame_bounds(fam, L)
  /// Called after each iteration with the iteration count and the iterate.
  std::function<void(int, const ZonalFunction&)> on_iterate;
};

struct FrameResult {
  ZonalFunction f;
  double A = 0.0, B = 0.0;
  double relaxation = 0.0;
  double delta = 0.0;
  /// delta^K, the guaranteed relative error reduction after K iterations.
  double error_bound = 0.0;
  int iterations = 0;
};

/// f_{k+1} = f_k + rho T*(W - T f_k), applied degreewise.
FrameResult frame_reconstruct(const WaveletCoefficients& W, const WaveletFamily& fam, const FrameOptions& opts = {});

}  // namespace spherepde
