#include "spherepde/io.hpp"

#include "spherepde/errors.hpp"
#include "spherepde/quadrature.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>

namespace spherepde {

double parse_double(const std::string& s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  const char* begin = s.data();
  if (begin != end && *begin == '+') ++begin;
  auto [p, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || p != end || s.empty()) throw ParseError("not a number: '" + s + "'");
  return v;
}

int parse_int(const std::string& s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) throw ParseError("not an integer: '" + s + "'");
  return v;
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& is) : is_(is) {}
  /// Next non-blank, non-comment line.
  bool next(std::string& line) {
    while (std::getline(is_, line)) {
      ++lineno_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  }
  std::string require(const char* what) {
    std::string line;
    if (!next(line)) throw ParseError(std::string("unexpected end of input, expected ") + what);
    return line;
  }
  /// Peeks for a line without consuming it.
  bool peek(std::string& line) {
    if (!pending_) {
      if (!next(buffer_)) return false;
      pending_ = true;
    }
    line = buffer_;
    return true;
  }
  std::string take(const char* what) {
    if (pending_) {
      pending_ = false;
      return buffer_;
    }
    return require(what);
  }
  int lineno() const { return lineno_; }

 private:
  std::istream& is_;
  int lineno_ = 0;
  bool pending_ = false;
  std::string buffer_;
};

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

std::vector<std::string> split_char(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '\t') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

// "<keyword> k=v k=v ..."
std::map<std::string, std::string> parse_header(const std::string& line, const std::string& keyword) {
  const auto tok = split_ws(line);
  if (tok.empty() || tok[0] != keyword) throw ParseError("expected a '" + keyword + "' header, got '" + line + "'");
  std::map<std::string, std::string> kv;
  for (size_t i = 1; i < tok.size(); ++i) {
    const auto eq = tok[i].find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("malformed header field '" + tok[i] + "'");
    if (!kv.emplace(tok[i].substr(0, eq), tok[i].substr(eq + 1)).second)
      throw ParseError("repeated header field '" + tok[i] + "'");
  }
  return kv;
}

const std::string& field(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw ParseError("header lacks '" + key + "='");
  return it->second;
}

int bandlimit_field(const std::map<std::string, std::string>& kv) {
  const int L = parse_int(field(kv, "L"));
  if (L < 0) throw ParseError("L must be >= 0");
  return L;
}

int dimension_field(const std::map<std::string, std::string>& kv) {
  const int n = parse_int(field(kv, "n"));
  if (n < 2) throw ParseError("n must be >= 2");
  return n;
}

std::ostream& precise(std::ostream& os) { return os << std::setprecision(17); }

// prints -0 as 0
double z(double v) { return v == 0.0 ? 0.0 : v; }

void write_zonal_body(std::ostream& os, const ZonalFunction& f) {
  for (int l = 0; l <= f.bandlimit(); ++l) os << l << ' ' << z(f[l].real()) << ' ' << z(f[l].imag()) << '\n';
}

// Reads coefficient lines until the next line that does not start with a digit.
ZonalFunction read_zonal_body(LineReader& r, int n, int L) {
  auto f = ZonalFunction::zero(DimensionContext(n), L);
  std::set<int> seen;
  std::string line;
  while (r.peek(line)) {
    const auto tok = split_ws(line);
    if (tok.empty() || !(std::isdigit(static_cast<unsigned char>(tok[0][0])) || tok[0][0] == '-')) break;
    r.take("coefficient");
    if (tok.size() != 3) throw ParseError("line " + std::to_string(r.lineno()) + ": expected 'l re im'");
    const int l = parse_int(tok[0]);
    if (l < 0 || l > L) throw ParseError("degree " + tok[0] + " outside 0..L");
    if (!seen.insert(l).second) throw ParseError("degree " + tok[0] + " given twice");
    f[l] = cplx(parse_double(tok[1]), parse_double(tok[2]));
  }
  return f;
}

void expect_end(LineReader& r) {
  std::string line;
  if (r.peek(line)) throw ParseError("unexpected trailing line '" + line + "'");
}

}  // namespace

void write_zonal(std::ostream& os, const ZonalFunction& f) {
  precise(os) << "zonal n=" << f.ctx().n() << " L=" << f.bandlimit() << '\n';
  write_zonal_body(os, f);
}

ZonalFunction read_zonal(std::istream& is) {
  LineReader r(is);
  const auto kv = parse_header(r.take("zonal header"), "zonal");
  auto f = read_zonal_body(r, dimension_field(kv), bandlimit_field(kv));
  expect_end(r);
  return f;
}

void write_s2(std::ostream& os, const SphereSignalS2& f) {
  precise(os) << "s2 L=" << f.bandlimit() << '\n';
  for (int l = 0; l <= f.bandlimit(); ++l)
    for (int m = -l; m <= l; ++m) os << l << ' ' << m << ' ' << z(f(l, m).real()) << ' ' << z(f(l, m).imag()) << '\n';
}

SphereSignalS2 read_s2(std::istream& is) {
  LineReader r(is);
  const auto kv = parse_header(r.take("s2 header"), "s2");
  const int L = bandlimit_field(kv);
  SphereSignalS2 f(L);
  std::vector<bool> seen(static_cast<size_t>((L + 1) * (L + 1)), false);
  std::string line;
  while (r.next(line)) {
    const auto tok = split_ws(line);
    if (tok.size() != 4) throw ParseError("line " + std::to_string(r.lineno()) + ": expected 'l m re im'");
    const int l = parse_int(tok[0]);
    const int m = parse_int(tok[1]);
    if (l < 0 || l > L || std::abs(m) > l) throw ParseError("index (" + tok[0] + ", " + tok[1] + ") out of range");
    const size_t k = SphereSignalS2::index(l, m);
    if (seen[k]) throw ParseError("index (" + tok[0] + ", " + tok[1] + ") given twice");
    seen[k] = true;
    f(l, m) = cplx(parse_double(tok[2]), parse_double(tok[3]));
  }
  return f;
}

void write_grid(std::ostream& os, const GridS2& g) {
  precise(os) << "theta,phi,re,im\n";
  for (int i = 0; i < g.geometry.ntheta(); ++i)
    for (int j = 0; j < g.geometry.nphi(); ++j) {
      const cplx v = g.at(i, j);
      os << g.geometry.theta[static_cast<size_t>(i)] << ',' << g.geometry.phi[static_cast<size_t>(j)] << ','
         << z(v.real()) << ',' << z(v.imag()) << '\n';
    }
}

GridS2 read_grid(std::istream& is) {
  LineReader r(is);
  if (split_char(r.take("grid header"), ',') != std::vector<std::string>{"theta", "phi", "re", "im"})
    throw ParseError("grid header must be 'theta,phi,re,im'");
  std::vector<double> th, ph;
  std::vector<cplx> vals;
  std::string line;
  while (r.next(line)) {
    const auto tok = split_char(line, ',');
    if (tok.size() != 4) throw ParseError("line " + std::to_string(r.lineno()) + ": expected 4 fields");
    th.push_back(parse_double(tok[0]));
    ph.push_back(parse_double(tok[1]));
    vals.emplace_back(parse_double(tok[2]), parse_double(tok[3]));
  }
  if (vals.empty()) throw ParseError("grid has no samples");
  // row-major: phi cycles fastest
  size_t nphi = 1;
  while (nphi < th.size() && th[nphi] == th[0]) ++nphi;
  if (th.size() % nphi != 0) throw ParseError("grid rows have unequal length");
  const size_t ntheta = th.size() / nphi;

  GridS2 g;
  const QuadratureRule q = gauss_legendre(static_cast<int>(ntheta));
  for (size_t i = 0; i < ntheta; ++i) {
    const size_t k = ntheta - 1 - i;
    g.geometry.theta.push_back(std::acos(q.nodes[k]));
    g.geometry.weights.push_back(q.weights[k]);
  }
  for (size_t j = 0; j < nphi; ++j) g.geometry.phi.push_back(2.0 * std::numbers::pi * static_cast<double>(j) / nphi);
  for (size_t i = 0; i < ntheta; ++i)
    for (size_t j = 0; j < nphi; ++j) {
      const size_t k = i * nphi + j;
      if (std::fabs(th[k] - g.geometry.theta[i]) > 1e-12 || std::fabs(ph[k] - g.geometry.phi[j]) > 1e-12)
        throw ParseError("sample " + std::to_string(k) + " is not on a Gauss-Legendre by uniform grid");
    }
  g.samples = std::move(vals);
  return g;
}

void write_kernel_csv(std::ostream& os, const std::vector<KernelRow>& rows) {
  precise(os) << "t,value,method\n";
  for (const auto& row : rows) os << row.t << ',' << row.value << ',' << row.method << '\n';
}

std::vector<KernelRow> read_kernel_csv(std::istream& is) {
  LineReader r(is);
  if (split_char(r.take("kernel header"), ',') != std::vector<std::string>{"t", "value", "method"})
    throw ParseError("kernel table header must be 't,value,method'");
  std::vector<KernelRow> rows;
  std::string line;
  while (r.next(line)) {
    const auto tok = split_char(line, ',');
    if (tok.size() != 3 || tok[2].empty()) throw ParseError("line " + std::to_string(r.lineno()) + ": expected t,value,method");
    rows.push_back({parse_double(tok[0]), parse_double(tok[1]), tok[2]});
  }
  return rows;
}

void write_cwt(std::ostream& os, const WaveletCoefficients& W) {
  const int n = W.per_scale.empty() ? 2 : W.per_scale.front().ctx().n();
  precise(os) << "cwt family=" << W.family << " n=" << n << " S=" << W.scales.size() << '\n';
  for (size_t s = 0; s < W.scales.size(); ++s) {
    os << "scale rho=" << W.scales.rho[s] << " weight=" << W.scales.weight[s] << '\n';
    write_zonal(os, W.per_scale[s]);
  }
}

WaveletCoefficients read_cwt(std::istream& is) {
  LineReader r(is);
  const auto kv = parse_header(r.take("cwt header"), "cwt");
  const int n = dimension_field(kv);
  const int S = parse_int(field(kv, "S"));
  if (S < 0) throw ParseError("S must be >= 0");
  WaveletCoefficients W;
  W.family = field(kv, "family");
  for (int s = 0; s < S; ++s) {
    const auto sk = parse_header(r.take("scale line"), "scale");
    const double rho = parse_double(field(sk, "rho"));
    if (!(rho > 0.0)) throw ParseError("scale rho must be positive");
    W.scales.rho.push_back(rho);
    W.scales.weight.push_back(parse_double(field(sk, "weight")));
    const auto zk = parse_header(r.take("zonal header"), "zonal");
    if (dimension_field(zk) != n) throw ParseError("zonal block dimension differs from the cwt header");
    W.per_scale.push_back(read_zonal_body(r, n, bandlimit_field(zk)));
  }
  expect_end(r);
  return W;
}

void write_helmholtz(std::ostream& os, const HelmholtzSpec& p) {
  precise(os) << "helmholtz n=" << p.n << " a=" << p.a.real() << ',' << p.a.imag();
  if (p.L) os << " L=" << *p.L;
  os << '\n';
  write_zonal(os, p.f);
}

HelmholtzSpec read_helmholtz(std::istream& is) {
  LineReader r(is);
  const auto kv = parse_header(r.take("helmholtz header"), "helmholtz");
  HelmholtzSpec p{dimension_field(kv), cplx(), std::nullopt, ZonalFunction::zero(DimensionContext(2), 0)};
  const auto a = split_char(field(kv, "a"), ',');
  if (a.size() != 2) throw ParseError("a must be written re,im");
  p.a = cplx(parse_double(a[0]), parse_double(a[1]));
  if (kv.count("L")) {
    p.L = parse_int(kv.at("L"));
    if (*p.L < 0) throw ParseError("resonant degree L must be >= 0");
  }
  for (const auto& [k, v] : kv)
    if (k != "n" && k != "a" && k != "L") throw ParseError("unknown header field '" + k + "'");
  const auto zk = parse_header(r.take("zonal header"), "zonal");
  if (dimension_field(zk) != p.n) throw ParseError("zonal block dimension differs from the helmholtz header");
  p.f = read_zonal_body(r, p.n, bandlimit_field(zk));
  expect_end(r);
  return p;
}

}  // namespace spherepde
