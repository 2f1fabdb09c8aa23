#include "spherepde/derive.hpp"

#include "spherepde/errors.hpp"
#include "spherepde/lemmas.hpp"

#include <stdexcept>
#include <string>

namespace spherepde {

namespace {

void check_even(int n) {
  if (n < 2 || n > 12) throw UnsupportedError("derivation covers even n in [2, 12], got " + std::to_string(n));
  if (n % 2 != 0) throw UnsupportedError("derivation needs even n (half-integer lambda), got " + std::to_string(n));
}

// Endpoint value in u = sqrt((1-t)/2): rat + lu ln u + l1 ln(1+u) + l2 ln 2.
struct UValue {
  RatFunc rat, lu, l1, l2;
  UValue& operator+=(const UValue& o) {
    rat += o.rat;
    lu += o.lu;
    l1 += o.l1;
    l2 += o.l2;
    return *this;
  }
  UValue scaled(const RatFunc& c) const { return {rat * c, lu * c, l1 * c, l2 * c}; }
};

// t = 1 - 2u^2
const RationalPoly& t_of_u() {
  static const RationalPoly p{Rational(1), Rational(0), Rational(-2)};
  return p;
}

RatFunc two_power(int h) {
  const Rational p(BigInt(1) << std::abs(h));
  return RatFunc(h >= 0 ? p : Rational(1) / p);
}

UValue at_one(const Expr& e) {
  UValue v;
  for (const auto& [key, lau] : e.terms()) {
    const auto [h, log] = key;
    RatFunc sum;
    for (const auto& [p, c] : lau) sum += c;
    // D = 4u^2 at R = 1
    const RatFunc c = sum.compose(t_of_u()) * two_power(h) * RatFunc::power_of_x(h);
    // both logarithms equal ln 2 + ln u + ln(1+u)
    if (log == LogKind::None) v.rat += c;
    else v += UValue{RatFunc(), c, c, c};
  }
  return v;
}

UValue at_zero(const Expr& e) {
  UValue v;
  for (const auto& [key, lau] : e.terms()) {
    const auto [h, log] = key;
    for (const auto& [p, c0] : lau) {
      if (p < 0) throw DomainError("antiderivative has a pole at R = 0");
      if (p > 0) continue;
      const RatFunc c = c0.compose(t_of_u());
      if (log == LogKind::None) v.rat += c;
      else if (log == LogKind::LogA) v += UValue{RatFunc(), c * RatFunc(Rational(2)), RatFunc(), c};
      else v.l2 += c;
    }
  }
  return v;
}

// p(u) with only even powers, or p(u)/u with only odd ones, as a polynomial in t
RationalPoly even_to_t(const RationalPoly& p) {
  RationalPoly s;
  for (int k = 0; 2 * k <= p.degree(); ++k) s += RationalPoly::monomial(p.coeff(2 * k), k);
  // u^2 = (1 - t)/2
  return s.compose(RationalPoly{Rational(1, 2), Rational(-1, 2)});
}

RationalPoly drop_u(const RationalPoly& p) {
  std::vector<Rational> c(p.coeffs().begin() + 1, p.coeffs().end());
  return RationalPoly(std::move(c));
}

RatFunc u_to_t(const RatFunc& f) {
  RationalPoly num = f.num(), den = f.den();
  if (num.has_only_parity(1) && den.has_only_parity(1)) {
    num = drop_u(num);
    den = drop_u(den);
  }
  if (!num.has_only_parity(0) || !den.has_only_parity(0))
    throw std::logic_error("derived kernel is not a function of t: " + f.render("u"));
  return RatFunc(even_to_t(num), even_to_t(den));
}

}  // namespace

Expr derive_gamma(int n) {
  check_even(n);
  return lemma1_antiderivative(Rational(n - 1, 2));
}

Expr derive_zeta(int n) {
  const Expr gamma = derive_gamma(n);
  Expr z(World::Shifted);
  for (const auto& [key, lau] : gamma.terms()) {
    const auto [h, log] = key;
    for (const auto& [p, c] : lau) {
      const int k = p + n - 2;
      if (k < 0) throw std::logic_error("negative power in the R-integrand");
      Expr piece(World::Shifted);
      if (log == LogKind::LogB) {
        if (h != 0) throw std::logic_error("logarithm times a power of D in the R-integrand");
        piece = k == 0 ? log_integral_k0() : lemma4_log_integral(k);
      } else if (log == LogKind::None && h == 0) {
        piece = Expr::term(World::Shifted, RatFunc(Rational(1, k + 1)), k + 1);
      } else if (log == LogKind::None && h < 0 && h % 2 != 0) {
        piece = lemma3_calI(k, (-h - 1) / 2);
      } else {
        throw std::logic_error("R-integrand term outside the lemma algebra");
      }
      z += piece.scaled(c);
    }
  }
  return z;
}

ClosedFormZonal derive_kernel_K_even(int n) {
  check_even(n);
  const Expr gamma = derive_gamma(n);
  const Expr zeta = derive_zeta(n);

  UValue k = at_zero(gamma).scaled(RatFunc(Rational(1, n - 1)));
  k += at_one(zeta).scaled(RatFunc(Rational(-1)));
  k += at_zero(zeta);

  if (!k.l1.is_zero() || !k.l2.is_zero())
    throw std::logic_error("ln(1+u) or ln 2 survived the endpoint evaluation");
  // ln u = ln((1-t)/2) / 2
  const RatFunc log_coef = u_to_t(k.lu * RatFunc(Rational(1, 2)));
  if (!log_coef.is_polynomial()) throw std::logic_error("logarithm coefficient is not polynomial");
  const RatFunc rat = u_to_t(k.rat);
  const Rational d0 = log_coef.den().coeff(0);
  return ClosedFormZonal(rat.num(), rat.den(), log_coef.num() * (Rational(1) / d0), {}, 0);
}

}  // namespace spherepde
