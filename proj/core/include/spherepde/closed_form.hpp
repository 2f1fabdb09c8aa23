#pragma once

#include "spherepde/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spherepde {

/// Exact zonal expression in t = cos(theta):
///   num(t)/den(t) + log_coef(t) ln((1-t)/2)
///     + (pi - theta) arc_coef(t) / (1-t^2)^{halfpow/2} + constant.
/// Immutable; construction reduces the rational part and prepares an exact
/// expansion in phi = pi - theta used close to t = -1, where the arc and
/// rational parts are separately singular.
class ClosedFormZonal {
 public:
  ClosedFormZonal();
  ClosedFormZonal(RationalPoly num, RationalPoly den, RationalPoly log_coef, RationalPoly arc_coef,
                  int halfpow, Rational constant = Rational(0));

  const RatFunc& rational() const { return rational_; }
  const RationalPoly& log_coef() const { return log_coef_; }
  const RationalPoly& arc_coef() const { return arc_coef_; }
  int halfpow() const { return halfpow_; }
  const Rational& constant() const { return constant_; }
  bool has_arc() const { return !arc_coef_.is_zero(); }

  /// Refuses t in (1 - 1e-8, 1] and |t| > 1.
  double eval(double t) const;
  /// No near-pole guard; for quadrature nodes that crowd t = 1.
  /// `one_minus_t` must equal 1 - t (passed separately to avoid cancellation).
  double eval_unchecked(double t, double one_minus_t) const;
  /// Term-by-term floating evaluation without the expansion near t = -1.
  double eval_direct(double t, double one_minus_t) const;

  /// Constant folded into the rational part.
  ClosedFormZonal normalized() const;
  bool is_zero() const;
  ClosedFormZonal operator-(const ClosedFormZonal& o) const;
  ClosedFormZonal operator+(const ClosedFormZonal& o) const;
  friend bool operator==(const ClosedFormZonal& a, const ClosedFormZonal& b);

  /// rat{num=[...];den=[...]} + log{coef=[...]} + arc{coef=[...];halfpow=m} [+ const{value=q}]
  std::string serialize() const;
  static ClosedFormZonal parse(const std::string& text);
  /// Human-readable rendering in t.
  std::string render() const;

  /// Whether the expansion about t = -1 was prepared (arc part or a rational
  /// pole at t = -1 present) and has no negative powers of phi.
  bool has_minus_one_series() const { return !series_.empty(); }

 private:
  void prepare();

  RatFunc rational_;
  RationalPoly log_coef_;
  RationalPoly arc_coef_;
  int halfpow_ = 0;
  Rational constant_;

  // double copies for fast evaluation
  std::vector<double> num_d_, den_d_, log_d_, arc_d_;
  double const_d_ = 0.0;
  std::vector<double> series_;  // coefficients of phi^0, phi^1, ...
};

/// Shipped closed forms for the Poisson kernel, n = 2..10.
const ClosedFormZonal& table_kernel_K(int n);
/// Shipped closed forms for G_L, n = 2..8, L = 1..4.
const ClosedFormZonal& table_green_GL(int n, int L);
bool has_table_kernel_K(int n);
bool has_table_green_GL(int n, int L);

}  // namespace spherepde
