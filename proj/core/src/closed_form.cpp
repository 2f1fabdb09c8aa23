#include "spherepde/closed_form.hpp"

#include "spherepde/errors.hpp"

#include <cmath>
#include <numbers>
#include <regex>
#include <sstream>

namespace spherepde {

namespace {

using Series = std::vector<Rational>;

constexpr int kSeriesOrder = 30;
// below this phi = pi - theta the expansion about t = -1 is used
constexpr double kSeriesPhi = 0.3;

Series series_mul(const Series& a, const Series& b, size_t len) {
  Series out(len, Rational(0));
  for (size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// 1/a for a[0] != 0
Series series_inverse(const Series& a, size_t len) {
  Series out(len, Rational(0));
  out[0] = Rational(1) / a[0];
  for (size_t k = 1; k < len; ++k) {
    Rational s(0);
    for (size_t j = 1; j <= k && j < a.size(); ++j) s += a[j] * out[k - j];
    out[k] = -s / a[0];
  }
  return out;
}

Series series_compose(const RationalPoly& p, const Series& x, size_t len) {
  Series acc(len, Rational(0));
  for (int k = p.degree(); k >= 0; --k) {
    acc = series_mul(acc, x, len);
    acc[0] += p.coeff(k);
  }
  return acc;
}

std::vector<double> to_doubles_in_s(const RationalPoly& p) {
  // p(1 - s)
  const RationalPoly q = p.compose(RationalPoly{Rational(1), Rational(-1)});
  std::vector<double> out;
  for (const auto& c : q.coeffs()) out.push_back(to_double(c));
  return out;
}

double horner(const std::vector<double>& c, double x) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

const RationalPoly& one_minus_t_sq() {
  static const RationalPoly w{Rational(1), Rational(0), Rational(-1)};
  return w;
}

}  // namespace

ClosedFormZonal::ClosedFormZonal() : ClosedFormZonal({}, RationalPoly{Rational(1)}, {}, {}, 0) {}

ClosedFormZonal::ClosedFormZonal(RationalPoly num, RationalPoly den, RationalPoly log_coef,
                                 RationalPoly arc_coef, int halfpow, Rational constant)
    : rational_(num, den),
      log_coef_(std::move(log_coef)),
      arc_coef_(std::move(arc_coef)),
      halfpow_(halfpow),
      constant_(std::move(constant)) {
  if (arc_coef_.is_zero()) halfpow_ = 0;
  else if (halfpow_ % 2 == 0) throw DomainError("arc term needs an odd power of (1-t^2)^(1/2)");
  prepare();
}

void ClosedFormZonal::prepare() {
  num_d_ = to_doubles_in_s(rational_.num());
  den_d_ = to_doubles_in_s(rational_.den());
  log_d_ = to_doubles_in_s(log_coef_);
  arc_d_ = to_doubles_in_s(arc_coef_);
  const_d_ = to_double(constant_);
  series_.clear();

  const bool pole = rational_.den().eval(Rational(-1)) == 0;
  if (!has_arc() && !pole) return;

  const int shift = std::max(halfpow_, 2 * rational_.den().degree()) + 2;
  const size_t len = static_cast<size_t>(kSeriesOrder + shift + 1);
  // t = -cos(phi), sin(phi) = phi * S(phi)
  Series tser(len, Rational(0)), sser(len, Rational(0));
  {
    Rational fact(1);
    for (size_t k = 0; k < len; ++k) {
      if (k > 0) fact *= Rational(static_cast<long long>(k));
      if (k % 2 == 0) tser[k] = ((k / 2) % 2 == 0 ? Rational(-1) : Rational(1)) / fact;
      else sser[k - 1] = ((k / 2) % 2 == 0 ? Rational(1) : Rational(-1)) / fact;
    }
  }

  // Laurent pieces: (lowest power, coefficients)
  std::vector<std::pair<int, Series>> parts;
  if (has_arc()) {
    Series inv_s = series_inverse(sser, len);
    Series a = series_compose(arc_coef_, tser, len);
    for (int i = 0; i < halfpow_; ++i) a = series_mul(a, inv_s, len);
    parts.emplace_back(1 - halfpow_, std::move(a));
  }
  {
    Series d = series_compose(rational_.den(), tser, len);
    size_t v = 0;
    while (v < d.size() && d[v] == 0) ++v;
    if (v == d.size()) return;
    Series dp(d.begin() + static_cast<long>(v), d.end());
    Series r = series_mul(series_compose(rational_.num(), tser, len), series_inverse(dp, len - v), len - v);
    parts.emplace_back(-static_cast<int>(v), std::move(r));
  }

  int lo = 0, hi = kSeriesOrder;
  for (const auto& [off, c] : parts) {
    lo = std::min(lo, off);
    hi = std::min(hi, off + static_cast<int>(c.size()) - 1);
  }
  Series total(static_cast<size_t>(hi - lo + 1), Rational(0));
  for (const auto& [off, c] : parts)
    for (int p = off; p <= hi; ++p) total[static_cast<size_t>(p - lo)] += c[static_cast<size_t>(p - off)];
  for (int p = lo; p < 0; ++p)
    if (total[static_cast<size_t>(p - lo)] != 0) return;  // genuinely singular at t = -1
  for (int p = 0; p <= hi; ++p) series_.push_back(to_double(total[static_cast<size_t>(p - lo)]));
}

double ClosedFormZonal::eval(double t) const {
  if (!(std::fabs(t) <= 1.0)) throw DomainError("t must lie in [-1, 1], got " + std::to_string(t));
  if (t > 1.0 - 1e-8) throw SingularityError("closed form is singular at t=1");
  return eval_unchecked(t, 1.0 - t);
}

double ClosedFormZonal::eval_unchecked(double t, double one_minus_t) const {
  const double one_plus_t = 1.0 + t;
  if (!series_.empty() && one_plus_t < 1.0 - std::cos(kSeriesPhi)) {
    const double phi = 2.0 * std::asin(std::sqrt(0.5 * one_plus_t));
    double v = horner(series_, phi) + const_d_;
    if (!log_d_.empty()) v += horner(log_d_, one_minus_t) * std::log(0.5 * one_minus_t);
    return v;
  }
  return eval_direct(t, one_minus_t);
}

double ClosedFormZonal::eval_direct(double t, double one_minus_t) const {
  const double s = one_minus_t;
  double v = horner(num_d_, s) / horner(den_d_, s) + const_d_;
  if (!log_d_.empty()) v += horner(log_d_, s) * std::log(0.5 * s);
  if (!arc_d_.empty()) {
    const double phi = std::numbers::pi - 2.0 * std::asin(std::sqrt(0.5 * s));
    const double w = s * (1.0 + t);
    v += phi * horner(arc_d_, s) / std::pow(w, 0.5 * halfpow_);
  }
  return v;
}

ClosedFormZonal ClosedFormZonal::normalized() const {
  RatFunc r = rational_ + RatFunc(constant_);
  RationalPoly arc = arc_coef_;
  int m = halfpow_;
  while (!arc.is_zero() && m >= 1) {
    RationalPoly q, rem;
    arc.divmod(one_minus_t_sq(), q, rem);
    if (!rem.is_zero()) break;
    arc = q;
    m -= 2;
  }
  return ClosedFormZonal(r.num(), r.den(), log_coef_, arc, m);
}

bool ClosedFormZonal::is_zero() const {
  const auto z = normalized();
  return z.rational_.is_zero() && z.log_coef_.is_zero() && z.arc_coef_.is_zero();
}

ClosedFormZonal ClosedFormZonal::operator+(const ClosedFormZonal& o) const {
  RatFunc r = rational_ + o.rational_;
  RationalPoly a = arc_coef_, b = o.arc_coef_;
  int m = std::max(halfpow_, o.halfpow_);
  if (!a.is_zero() && halfpow_ < m) a *= one_minus_t_sq().pow((m - halfpow_) / 2);
  if (!b.is_zero() && o.halfpow_ < m) b *= one_minus_t_sq().pow((m - o.halfpow_) / 2);
  if (a.is_zero()) m = o.halfpow_;
  if (b.is_zero()) m = halfpow_;
  if (a.is_zero() && b.is_zero()) m = 0;
  return ClosedFormZonal(r.num(), r.den(), log_coef_ + o.log_coef_, a + b, m, constant_ + o.constant_);
}

ClosedFormZonal ClosedFormZonal::operator-(const ClosedFormZonal& o) const {
  ClosedFormZonal neg(-o.rational_.num(), o.rational_.den(), -o.log_coef_, -o.arc_coef_, o.halfpow_,
                      -o.constant_);
  return *this + neg;
}

bool operator==(const ClosedFormZonal& a, const ClosedFormZonal& b) {
  const auto x = a.normalized();
  const auto y = b.normalized();
  return x.rational_ == y.rational_ && x.log_coef_ == y.log_coef_ && x.arc_coef_ == y.arc_coef_ &&
         x.halfpow_ == y.halfpow_;
}

std::string ClosedFormZonal::serialize() const {
  std::ostringstream os;
  os << "rat{num=" << rational_.num().serialize() << ";den=" << rational_.den().serialize() << "}";
  if (!log_coef_.is_zero()) os << " + log{coef=" << log_coef_.serialize() << "}";
  if (has_arc()) os << " + arc{coef=" << arc_coef_.serialize() << ";halfpow=" << halfpow_ << "}";
  if (constant_ != 0) os << " + const{value=" << to_string(constant_) << "}";
  return os.str();
}

ClosedFormZonal ClosedFormZonal::parse(const std::string& text) {
  static const std::regex block(R"(\s*(rat|log|arc|const)\{([^}]*)\}\s*(\+|$))");
  static const std::regex field(R"(\s*([a-z]+)\s*=\s*([^;]*))");
  RationalPoly num{Rational(0)}, den{Rational(1)}, log, arc;
  int halfpow = 0;
  Rational constant(0);
  bool seen_rat = false;
  size_t pos = 0;
  try {
    auto begin = std::sregex_iterator(text.begin(), text.end(), block);
    for (auto it = begin; it != std::sregex_iterator(); ++it) {
      const auto& m = *it;
      if (static_cast<size_t>(m.position(0)) != pos) break;
      pos += static_cast<size_t>(m.length(0));
      const std::string kind = m[1];
      std::string body = m[2];
      std::vector<std::pair<std::string, std::string>> kv;
      std::istringstream is(body);
      std::string item;
      while (std::getline(is, item, ';')) {
        std::smatch fm;
        if (!std::regex_match(item, fm, field)) throw ParseError("bad field '" + item + "' in " + kind);
        kv.emplace_back(fm[1], fm[2]);
      }
      auto get = [&](const std::string& key) -> const std::string& {
        for (const auto& [k, v] : kv)
          if (k == key) return v;
        throw ParseError("missing '" + key + "' in " + kind + " block");
      };
      if (kind == "rat") {
        num = RationalPoly::parse(get("num"));
        den = RationalPoly::parse(get("den"));
        seen_rat = true;
      } else if (kind == "log") {
        log = RationalPoly::parse(get("coef"));
      } else if (kind == "arc") {
        arc = RationalPoly::parse(get("coef"));
        halfpow = std::stoi(get("halfpow"));
      } else {
        constant = parse_rational(get("value"));
      }
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("malformed closed form: ") + e.what());
  }
  if (pos != text.size() || !seen_rat) throw ParseError("malformed closed form: '" + text + "'");
  try {
    return ClosedFormZonal(num, den, log, arc, halfpow, constant);
  } catch (const DomainError& e) {
    throw ParseError(std::string("malformed closed form: ") + e.what());
  }
}

std::string ClosedFormZonal::render() const {
  std::ostringstream os;
  os << rational_.render("t");
  if (!log_coef_.is_zero()) os << " + (" << log_coef_.render("t") << ")*ln((1-t)/2)";
  if (has_arc()) {
    os << " + (pi - theta)*(" << arc_coef_.render("t") << ")/(1-t^2)";
    if (halfpow_ != 2) os << "^(" << halfpow_ << "/2)";
  }
  if (constant_ != 0) os << " + " << to_string(constant_);
  return os.str();
}

}  // namespace spherepde
