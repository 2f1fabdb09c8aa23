#pragma once

// Exact rational arithmetic: univariate polynomials and rational functions
// over Q. Backed by Boost.Multiprecision so coefficient growth never rounds.

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace spherepde {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(long long num, long long den = 1);
double to_double(const Rational& q);
/// "p/q" or "p" for integers.
std::string to_string(const Rational& q);
/// Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& text);

/// Dense polynomial with exact rational coefficients, ascending powers.
/// The zero polynomial has an empty coefficient vector.
class RationalPoly {
 public:
  RationalPoly() = default;
  RationalPoly(std::initializer_list<Rational> coeffs);
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly constant(const Rational& c);
  /// c * x^k
  static RationalPoly monomial(const Rational& c, int k);
  static RationalPoly x() { return monomial(Rational(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k (zero beyond the degree).
  Rational coeff(int k) const;
  const Rational& leading() const { return coeffs_.back(); }

  RationalPoly operator-() const;
  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  RationalPoly& operator*=(const RationalPoly& o);
  RationalPoly& operator*=(const Rational& c);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
  friend RationalPoly operator*(RationalPoly a, const Rational& c) { return a *= c; }
  friend RationalPoly operator*(const Rational& c, RationalPoly a) { return a *= c; }
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  RationalPoly derivative() const;
  RationalPoly pow(int k) const;
  /// p(q(x))
  RationalPoly compose(const RationalPoly& inner) const;
  Rational eval(const Rational& x) const;
  double eval(double x) const;

  /// Euclidean division; throws on division by zero.
  void divmod(const RationalPoly& divisor, RationalPoly& quotient, RationalPoly& remainder) const;
  /// Scaled so the leading coefficient is one (zero stays zero).
  RationalPoly monic() const;
  /// True when every odd (parity 1) or every even (parity 0) coefficient vanishes.
  bool has_only_parity(int parity) const;

  /// Human-readable, e.g. "4 - 7*t".
  std::string render(const std::string& var) const;
  /// Serialization "[c0,c1,...]".
  std::string serialize() const;
  static RationalPoly parse(const std::string& text);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic greatest common divisor.
RationalPoly gcd(RationalPoly a, RationalPoly b);

/// Reduced quotient of polynomials; the denominator is kept monic.
class RatFunc {
 public:
  RatFunc() : den_(RationalPoly::constant(Rational(1))) {}
  RatFunc(const RationalPoly& num);  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c);         // NOLINT(google-explicit-constructor)
  RatFunc(const RationalPoly& num, const RationalPoly& den);

  const RationalPoly& num() const { return num_; }
  const RationalPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// x^k for any integer k.
  static RatFunc power_of_x(int k);
  RatFunc pow(int k) const;
  RatFunc derivative() const;
  RatFunc compose(const RationalPoly& inner) const;
  double eval(double x) const;
  std::string render(const std::string& var) const;

 private:
  void normalize();
  RationalPoly num_;
  RationalPoly den_;
};

}  // namespace spherepde
