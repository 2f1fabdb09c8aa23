#include "spherepde/rational.hpp"

#include "spherepde/errors.hpp"

#include <sstream>
#include <utility>

namespace spherepde {

Rational make_rational(long long num, long long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw ParseError("rational with zero denominator: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError("malformed rational: '" + text + "'");
  }
}

// ---------------------------------------------------------------- RationalPoly

RationalPoly::RationalPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly(std::vector<Rational>{c}); }

RationalPoly RationalPoly::monomial(const Rational& c, int k) {
  if (k < 0) throw DomainError("negative monomial degree");
  std::vector<Rational> v(static_cast<size_t>(k) + 1);
  v[static_cast<size_t>(k)] = c;
  return RationalPoly(std::move(v));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<size_t>(k)];
}

RationalPoly RationalPoly::operator-() const {
  RationalPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RationalPoly RationalPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPoly(std::move(out));
}

RationalPoly RationalPoly::pow(int k) const {
  if (k < 0) throw DomainError("negative polynomial power");
  RationalPoly result = constant(Rational(1));
  RationalPoly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

RationalPoly RationalPoly::compose(const RationalPoly& inner) const {
  RationalPoly out;
  for (int i = degree(); i >= 0; --i) {
    out *= inner;
    out += constant(coeffs_[static_cast<size_t>(i)]);
  }
  return out;
}

Rational RationalPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[static_cast<size_t>(i)];
  return acc;
}

double RationalPoly::eval(double x) const {
  double acc = 0.0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + to_double(coeffs_[static_cast<size_t>(i)]);
  return acc;
}

void RationalPoly::divmod(const RationalPoly& divisor, RationalPoly& quotient,
                          RationalPoly& remainder) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  remainder = *this;
  int dq = degree() - divisor.degree();
  if (dq < 0) {
    quotient = {};
    return;
  }
  std::vector<Rational> q(static_cast<size_t>(dq) + 1);
  const Rational& lead = divisor.leading();
  while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
    int shift = remainder.degree() - divisor.degree();
    Rational c = remainder.leading() / lead;
    q[static_cast<size_t>(shift)] = c;
    auto& rc = remainder.coeffs_;
    for (size_t j = 0; j < divisor.coeffs_.size(); ++j)
      rc[j + static_cast<size_t>(shift)] -= c * divisor.coeffs_[j];
    remainder.trim();
  }
  quotient = RationalPoly(std::move(q));
}

RationalPoly RationalPoly::monic() const {
  if (is_zero()) return {};
  RationalPoly r = *this;
  Rational inv = Rational(1) / leading();
  r *= inv;
  return r;
}

bool RationalPoly::has_only_parity(int parity) const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (static_cast<int>(i % 2) != parity && coeffs_[i] != 0) return false;
  return true;
}

std::string RationalPoly::render(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (i == 0 || !unit) os << to_string(mag);
    if (i > 0) {
      if (!unit) os << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

std::string RationalPoly::serialize() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << to_string(coeffs_[i]);
  }
  os << ']';
  return os.str();
}

RationalPoly RationalPoly::parse(const std::string& text) {
  auto a = text.find('[');
  auto b = text.rfind(']');
  if (a == std::string::npos || b == std::string::npos || b < a)
    throw ParseError("malformed polynomial: '" + text + "'");
  std::string body = text.substr(a + 1, b - a - 1);
  std::vector<Rational> out;
  std::string item;
  std::istringstream is(body);
  while (std::getline(is, item, ',')) {
    auto s = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (s == std::string::npos) throw ParseError("empty polynomial coefficient");
    out.push_back(parse_rational(item.substr(s, e - s + 1)));
  }
  return RationalPoly(std::move(out));
}

RationalPoly gcd(RationalPoly a, RationalPoly b) {
  while (!b.is_zero()) {
    RationalPoly q, r;
    a.divmod(b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// --------------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const RationalPoly& num) : num_(num), den_(RationalPoly::constant(Rational(1))) {}

RatFunc::RatFunc(const Rational& c)
    : num_(RationalPoly::constant(c)), den_(RationalPoly::constant(Rational(1))) {}

RatFunc::RatFunc(const RationalPoly& num, const RationalPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = RationalPoly::constant(Rational(1));
    return;
  }
  if (den_.degree() > 0) {
    RationalPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      RationalPoly q, r;
      num_.divmod(g, q, r);
      num_ = q;
      den_.divmod(g, q, r);
      den_ = q;
    }
  }
  Rational lead = den_.leading();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DomainError("rational function division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RatFunc RatFunc::power_of_x(int k) {
  if (k >= 0) return RatFunc(RationalPoly::monomial(Rational(1), k));
  return RatFunc(RationalPoly::constant(Rational(1)), RationalPoly::monomial(Rational(1), -k));
}

RatFunc RatFunc::pow(int k) const {
  if (k >= 0) return RatFunc(num_.pow(k), den_.pow(k));
  if (is_zero()) throw DomainError("zero to a negative power");
  return RatFunc(den_.pow(-k), num_.pow(-k));
}

RatFunc RatFunc::derivative() const {
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::compose(const RationalPoly& inner) const {
  return RatFunc(num_.compose(inner), den_.compose(inner));
}

double RatFunc::eval(double x) const { return num_.eval(x) / den_.eval(x); }

std::string RatFunc::render(const std::string& var) const {
  if (is_polynomial()) {
    RatFunc tmp = *this;
    return tmp.num_.render(var);
  }
  return "(" + num_.render(var) + ")/(" + den_.render(var) + ")";
}

}  // namespace spherepde
