#pragma once

// Closed algebra for the antiderivatives of the even-dimension derivation.
// A term is  c(p) * x^k * Q^{h/2} * Log  with c a rational function of the
// parameter p, k any integer, h any integer, Log one of three logarithms.
//
//   world     parameter   x    Q               LogA              LogB
//   Lemma2    T           X    T + X^2         ln(X + sqrt(Q))   -
//   Shifted   t           R    1 - 2tR + R^2   ln(R - t + sqrt(Q)) ln(1 - tR + sqrt(Q))

#include "spherepde/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace spherepde {

enum class World { Lemma2, Shifted };
enum class LogKind { None, LogA, LogB };

class Expr {
 public:
  /// Coefficients by power of x.
  using Laurent = std::map<int, RatFunc>;
  /// Keyed by (h, log kind).
  using TermMap = std::map<std::pair<int, LogKind>, Laurent>;

  explicit Expr(World w) : world_(w) {}
  static Expr term(World w, const RatFunc& coef, int power, int h = 0, LogKind log = LogKind::None);

  World world() const { return world_; }
  const TermMap& terms() const { return terms_; }
  /// Number of nonzero monomials.
  size_t size() const;

  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  Expr operator-() const;

  Expr scaled(const RatFunc& c) const;
  /// Multiplies by x^k.
  Expr times_power(int k) const;
  /// Multiplies by Q^{h/2}.
  Expr times_q(int h) const;

  /// d/dx.
  Expr derivative() const;
  /// Lemma2 -> Shifted: X = R - t, T = 1 - t^2. Needs non-negative powers of X.
  Expr substitute_shift() const;

  /// Each (log kind, parity of h) group rewritten over its lowest h; the
  /// expression vanishes identically iff the result has no terms.
  Expr canonical() const;
  bool is_zero() const { return canonical().terms_.empty(); }

  double eval(double x, double param) const;
  std::string render() const;

 private:
  void add(int h, LogKind log, int power, const RatFunc& c);

  World world_;
  TermMap terms_;
};

/// Expr with its coefficients rounded once to long double, for repeated
/// evaluation; the extended precision absorbs cancellation between terms.
class NumericExpr {
 public:
  explicit NumericExpr(const Expr& e);
  double operator()(double x, double param) const;

 private:
  struct Term {
    int h, power;
    LogKind log;
    std::vector<long double> num, den;
  };
  World world_;
  std::vector<Term> terms_;
};

}  // namespace spherepde
