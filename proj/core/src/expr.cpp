#include "spherepde/expr.hpp"

#include "spherepde/errors.hpp"
#include "spherepde/special.hpp"

#include <cmath>
#include <sstream>

namespace spherepde {

namespace {

// Q as a polynomial in x with coefficients in the parameter.
Expr::Laurent q_poly(World w) {
  const RationalPoly p = RationalPoly::x();
  if (w == World::Lemma2) return {{0, RatFunc(p)}, {2, RatFunc(Rational(1))}};
  return {{0, RatFunc(Rational(1))}, {1, RatFunc(p * Rational(-2))}, {2, RatFunc(Rational(1))}};
}

Expr::Laurent laurent_mul(const Expr::Laurent& a, const Expr::Laurent& b) {
  Expr::Laurent out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      auto it = out.find(i + j);
      if (it == out.end()) out.emplace(i + j, x * y);
      else it->second += x * y;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

const char* log_name(World w, LogKind k) {
  if (k == LogKind::LogA) return w == World::Lemma2 ? "ln(X+sqrt(Q))" : "ln(R-t+sqrt(D))";
  if (k == LogKind::LogB) return "ln(1-t*R+sqrt(D))";
  return "";
}

}  // namespace

Expr Expr::term(World w, const RatFunc& coef, int power, int h, LogKind log) {
  if (w == World::Lemma2 && log == LogKind::LogB) throw DomainError("LogB lives in the shifted world only");
  Expr e(w);
  e.add(h, log, power, coef);
  return e;
}

void Expr::add(int h, LogKind log, int power, const RatFunc& c) {
  if (c.is_zero()) return;
  auto& lau = terms_[{h, log}];
  auto it = lau.find(power);
  if (it == lau.end()) {
    lau.emplace(power, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) lau.erase(it);
  }
  if (lau.empty()) terms_.erase({h, log});
}

size_t Expr::size() const {
  size_t n = 0;
  for (const auto& [key, lau] : terms_) n += lau.size();
  return n;
}

Expr& Expr::operator+=(const Expr& o) {
  if (o.world_ != world_) throw MismatchError("expressions from different worlds");
  for (const auto& [key, lau] : o.terms_)
    for (const auto& [p, c] : lau) add(key.first, key.second, p, c);
  return *this;
}

Expr& Expr::operator-=(const Expr& o) { return *this += -o; }

Expr Expr::operator-() const { return scaled(RatFunc(Rational(-1))); }

Expr Expr::scaled(const RatFunc& c) const {
  Expr e(world_);
  for (const auto& [key, lau] : terms_)
    for (const auto& [p, x] : lau) e.add(key.first, key.second, p, x * c);
  return e;
}

Expr Expr::times_power(int k) const {
  Expr e(world_);
  for (const auto& [key, lau] : terms_)
    for (const auto& [p, x] : lau) e.add(key.first, key.second, p + k, x);
  return e;
}

Expr Expr::times_q(int h) const {
  Expr e(world_);
  for (const auto& [key, lau] : terms_)
    for (const auto& [p, x] : lau) e.add(key.first + h, key.second, p, x);
  return e;
}

Expr Expr::derivative() const {
  Expr e(world_);
  const RatFunc param(RationalPoly::x());
  for (const auto& [key, lau] : terms_) {
    const auto [h, log] = key;
    for (const auto& [p, c] : lau) {
      // x^p
      if (p != 0) e.add(h, log, p - 1, c * RatFunc(Rational(p)));
      // Q^{h/2}
      if (h != 0) {
        const RatFunc ch = c * RatFunc(Rational(h));
        if (world_ == World::Lemma2) {
          e.add(h - 2, log, p + 1, ch);
        } else {
          e.add(h - 2, log, p + 1, ch);
          e.add(h - 2, log, p, -(ch * param));
        }
      }
      // logarithm
      if (log == LogKind::LogA) {
        e.add(h - 1, LogKind::None, p, c);
      } else if (log == LogKind::LogB) {
        e.add(h, LogKind::None, p - 1, c);
        e.add(h - 1, LogKind::None, p - 1, -c);
      }
    }
  }
  return e;
}

Expr Expr::substitute_shift() const {
  if (world_ != World::Lemma2) throw DomainError("substitute_shift expects a Lemma2 expression");
  Expr e(World::Shifted);
  // T = 1 - t^2, X = R - t
  const RationalPoly T{Rational(1), Rational(0), Rational(-1)};
  for (const auto& [key, lau] : terms_) {
    for (const auto& [p, c] : lau) {
      if (p < 0) throw DomainError("negative power of X cannot be shifted");
      const RatFunc cs = c.compose(T);
      for (int j = 0; j <= p; ++j) {
        // binom(p, j) R^j (-t)^{p-j}
        Rational b(binomial(static_cast<long>(p), static_cast<long>(j)));
        if ((p - j) % 2) b = -b;
        e.add(key.first, key.second, j, cs * RatFunc(RationalPoly::monomial(b, p - j)));
      }
    }
  }
  return e;
}

Expr Expr::canonical() const {
  // group key: (log kind, parity of h) -> (lowest h, accumulated Laurent)
  std::map<std::pair<LogKind, int>, std::pair<int, Laurent>> groups;
  for (const auto& [key, lau] : terms_) {
    const int par = ((key.first % 2) + 2) % 2;
    auto [it, fresh] = groups.try_emplace({key.second, par}, key.first, Laurent{});
    if (!fresh) it->second.first = std::min(it->second.first, key.first);
  }
  const Laurent q = q_poly(world_);
  for (const auto& [key, lau] : terms_) {
    const int par = ((key.first % 2) + 2) % 2;
    auto& g = groups.at({key.second, par});
    Laurent scaled = lau;
    for (int s = 0; s < (key.first - g.first) / 2; ++s) scaled = laurent_mul(scaled, q);
    for (const auto& [p, c] : scaled) {
      auto it = g.second.find(p);
      if (it == g.second.end()) g.second.emplace(p, c);
      else it->second += c;
    }
  }
  Expr e(world_);
  for (const auto& [gk, g] : groups)
    for (const auto& [p, c] : g.second) e.add(g.first, gk.first, p, c);
  return e;
}

double Expr::eval(double x, double param) const {
  double q, la = 0.0, lb = 0.0;
  if (world_ == World::Lemma2) {
    q = param + x * x;
    la = std::log(x + std::sqrt(q));
  } else {
    q = 1.0 - 2.0 * param * x + x * x;
    la = std::log(x - param + std::sqrt(q));
    lb = std::log(1.0 - param * x + std::sqrt(q));
  }
  double v = 0.0;
  for (const auto& [key, lau] : terms_) {
    double s = 0.0;
    for (const auto& [p, c] : lau) s += c.eval(param) * std::pow(x, p);
    s *= std::pow(q, 0.5 * key.first);
    if (key.second == LogKind::LogA) s *= la;
    else if (key.second == LogKind::LogB) s *= lb;
    v += s;
  }
  return v;
}

namespace {

std::vector<long double> to_long_doubles(const RationalPoly& p) {
  std::vector<long double> out;
  for (const auto& c : p.coeffs())
    out.push_back(numerator(c).convert_to<long double>() / denominator(c).convert_to<long double>());
  return out;
}

long double horner(const std::vector<long double>& c, long double x) {
  long double s = 0.0L;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * x + *it;
  return s;
}

}  // namespace

NumericExpr::NumericExpr(const Expr& e) : world_(e.world()) {
  for (const auto& [key, lau] : e.terms())
    for (const auto& [p, c] : lau) terms_.push_back({key.first, p, key.second, to_long_doubles(c.num()), to_long_doubles(c.den())});
}

double NumericExpr::operator()(double xd, double pd) const {
  const long double x = xd, param = pd;
  long double q, la = 0.0L, lb = 0.0L;
  if (world_ == World::Lemma2) {
    q = param + x * x;
    la = std::log(x + std::sqrt(q));
  } else {
    q = 1.0L - 2.0L * param * x + x * x;
    la = std::log(x - param + std::sqrt(q));
    lb = std::log(1.0L - param * x + std::sqrt(q));
  }
  long double v = 0.0L;
  for (const auto& t : terms_) {
    long double s = horner(t.num, param) / horner(t.den, param) * std::pow(x, t.power) * std::pow(q, 0.5L * t.h);
    if (t.log == LogKind::LogA) s *= la;
    else if (t.log == LogKind::LogB) s *= lb;
    v += s;
  }
  return static_cast<double>(v);
}

std::string Expr::render() const {
  if (terms_.empty()) return "0";
  const std::string par = world_ == World::Lemma2 ? "T" : "t";
  const std::string var = world_ == World::Lemma2 ? "X" : "R";
  const std::string qn = world_ == World::Lemma2 ? "Q" : "D";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, lau] : terms_) {
    for (const auto& [p, c] : lau) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.render(par) << ")";
      if (p != 0) os << "*" << var << "^" << p;
      if (key.first != 0) os << "*" << qn << "^(" << key.first << "/2)";
      if (key.second != LogKind::None) os << "*" << log_name(world_, key.second);
    }
  }
  return os.str();
}

}  // namespace spherepde
