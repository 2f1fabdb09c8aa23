#include "spherepde/acceptance.hpp"
#include "spherepde/closed_form.hpp"
#include "spherepde/derive.hpp"
#include "spherepde/errors.hpp"
#include "spherepde/helmholtz.hpp"
#include "spherepde/io.hpp"
#include "spherepde/poisson.hpp"
#include "spherepde/wavelet.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace spherepde;

namespace {

// exit codes
constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUnsupported = 2;
constexpr int kSolvability = 3;
constexpr int kCheckFailed = 4;

struct Globals {
  int n = 2;
  int L = -1;
  double tol = -1.0;
  std::string out;
  int quad_order = 0;
  std::string scales;
};

class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) v.push_back(parse_double(tok));
  return v;
}

ScaleGrid scale_grid(const Globals& g, double lo, double hi, int count) {
  if (!g.scales.empty()) {
    const auto v = parse_list(g.scales);
    if (v.size() != 3 || v[2] != std::floor(v[2])) throw ParseError("--scales needs min,max,count");
    lo = v[0];
    hi = v[1];
    count = static_cast<int>(v[2]);
  }
  return ScaleGrid::log_spaced(lo, hi, count);
}

// Output goes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParseError("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    ss << f.rdbuf();
  }
  return ss.str();
}

std::string header_word(const std::string& text) {
  std::istringstream ss(text);
  for (std::string line; std::getline(ss, line);) {
    const auto p = line.find_first_not_of(" \t");
    if (p == std::string::npos || line[p] == '#') continue;
    std::istringstream ls(line);
    std::string w;
    ls >> w;
    return w;
  }
  throw ParseError("input is empty");
}

// the residual line goes to stdout unless stdout carries the solution
void report_residual(const Output& out, double r) {
  std::ostream& os = out.to_file() ? std::cout : std::cerr;
  os << std::setprecision(17) << "residual=" << r << '\n';
}

double tol_or(const Globals& g, double fallback) { return g.tol > 0.0 ? g.tol : fallback; }

// kernel ------------------------------------------------------------------

struct KernelArgs {
  std::string kind = "K";
  std::vector<double> t;
  std::string grid;
  std::vector<std::string> methods{"series", "integral", "closed"};
  int lmax = 2000;
};

int cmd_kernel(const Globals& g, const KernelArgs& a) {
  const DimensionContext ctx(g.n);
  int L = 0;
  if (a.kind == "GL") {
    if (g.L < 1) throw ParseError("--kind GL needs --L >= 1");
    L = g.L;
  } else if (a.kind != "K") {
    throw ParseError("--kind must be K or GL");
  }
  std::vector<double> ts = a.t;
  if (!a.grid.empty()) {
    const auto v = parse_list(a.grid);
    if (v.size() != 3 || v[2] < 2 || v[2] != std::floor(v[2])) throw ParseError("--grid needs min,max,count");
    for (int i = 0; i < static_cast<int>(v[2]); ++i) ts.push_back(v[0] + (v[1] - v[0]) * i / (v[2] - 1));
  }
  if (ts.empty()) throw ParseError("give --t or --grid");
  for (double t : ts) check_kernel_argument(t);

  std::vector<KernelEvaluator> evals;
  for (const auto& m : a.methods) {
    KernelEvaluator e(ctx, parse_kernel_method(m), L);
    e.series_lmax = a.lmax;
    e.tol = tol_or(g, 1e-13);
    if (e.method == KernelMethod::Closed) {
      if (L == 0 && !has_table_kernel_K(g.n))
        throw UnsupportedError("no closed form for K with n=" + std::to_string(g.n));
      if (L > 0 && !has_table_green_GL(g.n, L))
        throw UnsupportedError("no closed form for G_L with n=" + std::to_string(g.n) + ", L=" + std::to_string(L));
    }
    evals.push_back(e);
  }
  std::vector<KernelRow> rows;
  for (double t : ts)
    for (const auto& e : evals) rows.push_back({t, e(t), to_string(e.method)});
  Output out(g.out);
  write_kernel_csv(out.stream(), rows);
  return kOk;
}

// solve -------------------------------------------------------------------

struct SolveArgs {
  std::string in;
  std::string route = "spectral";
  std::string kernel = "integral";
  std::string a;
  int iterations = 12000;
  int d = 1;
};

int solve_poisson_cmd(const Globals& g, const SolveArgs& s) {
  const std::string text = read_input(s.in);
  std::istringstream is(text);
  Output out(g.out);
  const std::string kind = header_word(text);
  if (kind == "zonal") {
    const ZonalFunction f = read_zonal(is);
    ZonalFunction u = f;
    if (s.route == "spectral") u = solve_poisson(f);
    else if (s.route == "convolution") u = solve_poisson(f, KernelEvaluator(f.ctx(), parse_kernel_method(s.kernel)));
    else throw ParseError("zonal input supports --route spectral|convolution");
    write_zonal(out.stream(), u);
    report_residual(out, poisson_residual(u, f));
    return kOk;
  }
  if (kind == "s2") {
    const SphereSignalS2 f = read_s2(is);
    SphereSignalS2 u = f;
    if (s.route == "spectral") {
      u = solve_poisson(f);
    } else if (s.route == "convolution") {
      u = solve_poisson(f, PoissonRoute::Convolution);
    } else if (s.route == "grid") {
      const int L = f.bandlimit();
      const int order = g.quad_order > 0 ? g.quad_order : L + 1;
      if (order < L + 1) throw ParseError("--quad-order must be at least L+1");
      const GridGeometryS2 geo = make_grid_geometry(L, order - (L + 1));
      const GridS2 ug = solve_poisson_grid(s2_inverse(f, geo), L, KernelEvaluator(DimensionContext(2), parse_kernel_method(s.kernel)));
      u = s2_forward(ug, L);
    } else {
      throw ParseError("--route must be spectral, convolution or grid");
    }
    write_s2(out.stream(), u);
    report_residual(out, poisson_residual(u, f));
    return kOk;
  }
  throw ParseError("input must be a zonal or s2 coefficient file");
}

int solve_helmholtz_cmd(const Globals& g, const SolveArgs& s) {
  const std::string text = read_input(s.in);
  std::istringstream is(text);
  ZonalFunction f = ZonalFunction::zero(DimensionContext(2), 0);
  std::optional<HelmholtzProblem> p;
  const std::string kind = header_word(text);
  if (kind == "helmholtz") {
    HelmholtzSpec spec = read_helmholtz(is);
    f = spec.f;
    if (spec.L) {
      p = HelmholtzProblem::resonant(f.ctx(), *spec.L);
      if (std::abs(p->a - spec.a) > 1e-12 * std::max(1.0, std::abs(spec.a)))
        throw ParseError("a does not equal L(L+n-1) for the resonant degree L=" + std::to_string(*spec.L));
    } else {
      p = HelmholtzProblem::non_resonant(f.ctx(), spec.a);
    }
  } else if (kind == "zonal") {
    f = read_zonal(is);
    if (g.L >= 0 && s.a.empty()) {
      p = HelmholtzProblem::resonant(f.ctx(), g.L);
    } else {
      const auto a = parse_list(s.a.empty() ? std::string("") : s.a);
      if (a.empty() || a.size() > 2) throw ParseError("zonal input needs --a re[,im] or --L for the resonant case");
      p = HelmholtzProblem::non_resonant(f.ctx(), cplx(a[0], a.size() == 2 ? a[1] : 0.0));
    }
  } else {
    throw ParseError("input must be a helmholtz problem or a zonal coefficient file");
  }

  ZonalFunction u = f;
  if (p->resonant_L) {
    if (s.route == "spectral") u = solve_resonant(*p, f, ResonantRoute::Spectral);
    else if (s.route == "convolution") u = solve_resonant(*p, f, KernelEvaluator(f.ctx(), parse_kernel_method(s.kernel), *p->resonant_L));
    else throw ParseError("resonant problems support --route spectral|convolution");
  } else if (s.route == "spectral") {
    u = solve_helmholtz_spectral(*p, f);
  } else if (s.route == "wavelet") {
    HelmholtzWaveletOptions o;
    o.d = s.d;
    o.iterations = s.iterations;
    if (!g.scales.empty()) o.scales = scale_grid(g, 0, 0, 0);
    u = solve_helmholtz_wavelet(*p, f, o).u;
  } else {
    throw ParseError("non-resonant problems support --route spectral|wavelet");
  }
  Output out(g.out);
  write_zonal(out.stream(), u);
  // the resonant solution is exact only off degree L
  ZonalFunction target = f;
  if (p->resonant_L && *p->resonant_L <= f.bandlimit()) target[*p->resonant_L] = 0.0;
  report_residual(out, norm(target) > 0.0 ? helmholtz_residual(*p, u, target) : 0.0);
  return kOk;
}

// wavelet -----------------------------------------------------------------

struct WaveletArgs {
  std::string in;
  std::string family = "abel-poisson";
  int d = 1;
  int lmax = 30;
  bool sampled = false;
};

int cmd_wavelet_analyze(const Globals& g, const WaveletArgs& w) {
  const std::string text = read_input(w.in);
  std::istringstream is(text);
  const ZonalFunction f = read_zonal(is);
  const WaveletFamily fam = builtin_family(w.family, f.ctx(), w.d);
  const WaveletCoefficients W = cwt(f, fam, scale_grid(g, 1e-4, 20.0, 200));
  for (int l : W.lost_degrees) std::cerr << "warning: degree " << l << " is annihilated by " << w.family << '\n';
  Output out(g.out);
  write_cwt(out.stream(), W);
  return kOk;
}

int cmd_wavelet_synthesize(const Globals& g, const WaveletArgs& w) {
  const std::string text = read_input(w.in);
  std::istringstream is(text);
  const WaveletCoefficients W = read_cwt(is);
  if (W.per_scale.empty()) throw ParseError("coefficient dump has no scales");
  const WaveletFamily fam = builtin_family(W.family, W.per_scale.front().ctx(), w.d);
  InversionOptions io;
  if (g.tol > 0.0) io.admissibility_tol = g.tol;
  Output out(g.out);
  write_zonal(out.stream(), icwt(W, fam, io));
  return kOk;
}

int cmd_wavelet_check(const Globals& g, const WaveletArgs& w) {
  const WaveletFamily fam = builtin_family(w.family, DimensionContext(g.n), w.d);
  const double tol = tol_or(g, 1e-8);
  const ScaleGrid grid = w.sampled ? scale_grid(g, 1e-4, 20.0, 200) : ScaleGrid{};
  Output out(g.out);
  std::ostream& os = out.stream();
  os << std::setprecision(17) << "l,defect\n";
  double worst = 0.0;
  for (int l = std::max(1, fam.order() + 1); l <= w.lmax; ++l) {
    const double v = w.sampled ? admissibility_defect(fam, l, grid) : admissibility_defect(fam, l);
    worst = std::max(worst, std::fabs(v - 1.0));
    os << l << ',' << v << '\n';
  }
  if (worst > tol)
    throw CheckFailed("admissibility defect deviates from 1 by " + std::to_string(worst) + " (tolerance " +
                      std::to_string(tol) + ")");
  return kOk;
}

// derive / selftest -----------------------------------------------------------

int cmd_derive(const Globals& g) {
  const ClosedFormZonal k = derive_kernel_K_even(g.n);
  Output out(g.out);
  out.stream() << k.serialize() << '\n' << "K(t) = " << k.render() << '\n';
  return kOk;
}

int cmd_selftest(const Globals& g, const std::vector<int>& only) {
  Output out(g.out);
  bool ok = true;
  for (int id = 1; id <= 9; ++id) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const CriterionResult r = run_criterion(id);
    ok = ok && r.passed;
    out.stream() << format_result(r) << std::endl;
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poisson and Helmholtz equations on the n-sphere"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--n", g.n, "sphere dimension")->check(CLI::Range(2, 1000));
  app.add_option("--L", g.L, "bandlimit or Green function degree")->check(CLI::NonNegativeNumber);
  app.add_option("--tol", g.tol, "tolerance override")->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--quad-order", g.quad_order, "Gauss-Legendre order of sampled grids")->check(CLI::PositiveNumber);
  app.add_option("--scales", g.scales, "scale grid min,max,count");

  KernelArgs ka;
  auto* kernel = app.add_subcommand("kernel", "tabulate K or G_L as t,value,method");
  kernel->add_option("--kind", ka.kind, "K or GL")->check(CLI::IsMember({"K", "GL"}));
  kernel->add_option("--t", ka.t, "evaluation points")->delimiter(',');
  kernel->add_option("--grid", ka.grid, "uniform t grid min,max,count");
  kernel->add_option("--methods", ka.methods, "series, integral, closed")->delimiter(',');
  kernel->add_option("--lmax", ka.lmax, "series truncation")->check(CLI::Range(2, 1000000));

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "solve a Poisson or Helmholtz equation");
  solve->require_subcommand(1);
  auto* sp = solve->add_subcommand("poisson", "Lap* u = f");
  auto* sh = solve->add_subcommand("helmholtz", "Lap* u + a u = f");
  for (auto* c : {sp, sh}) {
    c->add_option("--in", sa.in, "coefficient file, - for stdin")->required();
    c->add_option("--kernel", sa.kernel, "kernel evaluator for the convolution routes")
        ->check(CLI::IsMember({"series", "integral", "closed"}));
  }
  sp->add_option("--route", sa.route, "spectral, convolution, grid")->check(CLI::IsMember({"spectral", "convolution", "grid"}));
  sh->add_option("--route", sa.route, "spectral, wavelet, convolution")
      ->check(CLI::IsMember({"spectral", "wavelet", "convolution"}));
  sh->add_option("--a", sa.a, "Helmholtz parameter re[,im]");
  sh->add_option("--iterations", sa.iterations, "frame iterations")->check(CLI::NonNegativeNumber);
  sh->add_option("--d", sa.d, "wavelet order")->check(CLI::Range(1, 20));

  WaveletArgs wa;
  auto* wavelet = app.add_subcommand("wavelet", "continuous wavelet transform tools");
  wavelet->require_subcommand(1);
  auto* wan = wavelet->add_subcommand("analyze", "zonal file to coefficient dump");
  auto* wsy = wavelet->add_subcommand("synthesize", "coefficient dump to zonal file");
  auto* wch = wavelet->add_subcommand("check", "admissibility defect table");
  for (auto* c : {wan, wsy, wch}) c->add_option("--d", wa.d, "family order")->check(CLI::Range(1, 20));
  for (auto* c : {wan, wsy}) c->add_option("--in", wa.in, "input file, - for stdin")->required();
  for (auto* c : {wan, wch}) c->add_option("--family", wa.family, "builtin family")->check(CLI::IsMember(builtin_family_names()));
  wch->add_option("--lmax", wa.lmax, "largest degree")->check(CLI::Range(1, 100000));
  wch->add_flag("--sampled", wa.sampled, "use the discrete scale grid instead of exact integrals");

  auto* derive = app.add_subcommand("derive", "exact kernel K for even n");
  std::vector<int> only;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
  selftest->add_option("--only", only, "criterion ids")->delimiter(',')->check(CLI::Range(1, 9));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUnsupported;
  }

  try {
    if (*kernel) return cmd_kernel(g, ka);
    if (*sp) return solve_poisson_cmd(g, sa);
    if (*sh) return solve_helmholtz_cmd(g, sa);
    if (*wan) return cmd_wavelet_analyze(g, wa);
    if (*wsy) return cmd_wavelet_synthesize(g, wa);
    if (*wch) return cmd_wavelet_check(g, wa);
    if (*derive) return cmd_derive(g);
    if (*selftest) return cmd_selftest(g, only);
  } catch (const SolvabilityError& e) {
    std::cerr << "not solvable: " << e.what() << '\n';
    return kSolvability;
  } catch (const CheckFailed& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUnsupported;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUnsupported;
}
