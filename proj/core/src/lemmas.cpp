#include "spherepde/lemmas.hpp"

#include "spherepde/errors.hpp"
#include "spherepde/special.hpp"

namespace spherepde {

namespace {

RatFunc rc(const Rational& q) { return RatFunc(q); }

// c * p^k for the formal parameter p, any integer k
RatFunc param_power(const Rational& c, int k) { return RatFunc::power_of_x(k) * rc(c); }

Rational sign(int k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

Rational bin(long n, long k) { return Rational(binomial(n, k)); }

// (1 - t^2)^k as a rational function of t
RatFunc bold_t_power(int k) {
  const RationalPoly w{Rational(1), Rational(0), Rational(-1)};
  return k >= 0 ? RatFunc(w.pow(k)) : RatFunc(RationalPoly{Rational(1)}, w.pow(-k));
}

int half_integer_J(const Rational& lambda) {
  const Rational twice = Rational(2 * lambda);
  if (denominator(twice) != 1 || numerator(twice) % 2 == 0 || lambda <= 0)
    throw DomainError("lambda must be a positive half-integer, got " + to_string(lambda));
  return static_cast<int>(numerator(twice) - 1) / 2;
}

}  // namespace

std::vector<RationalPoly> lemma1_Q(const Rational& lambda) {
  const int J = half_integer_J(lambda);
  std::vector<RationalPoly> Q;
  if (J == 0) return Q;
  const RationalPoly T = RationalPoly::x();
  const RationalPoly one{Rational(1)};
  Q.push_back(RationalPoly::constant(Rational(1) / (2 * (lambda - 1))));
  if (J >= 2)
    Q.push_back(((2 * lambda - 3) * one + 2 * (lambda - 1) * T) * Q[0] * (Rational(1) / (2 * (lambda - 2))));
  for (int j = 2; j < J; ++j) {
    RationalPoly next = ((2 * lambda - 2 * j - 1) * one + 2 * (lambda - j) * T) * Q[static_cast<size_t>(j - 1)] -
                        (2 * lambda - 2 * j + 1) * T * Q[static_cast<size_t>(j - 2)];
    Q.push_back(next * (Rational(1) / (2 * (lambda - j - 1))));
  }
  return Q;
}

Expr lemma1_antiderivative(const Rational& lambda) {
  const int J = half_integer_J(lambda);
  const auto Q = lemma1_Q(lambda);
  const int h0 = 2 * J + 1;  // 2 lambda
  Expr e = Expr::term(World::Shifted, rc(Rational(1) / lambda), 0, -h0);
  const RatFunc t(RationalPoly::x());
  const RationalPoly w{Rational(1), Rational(0), Rational(-1)};
  for (int j = 1; j <= J; ++j) {
    const int h = -(h0 - 2 * j);
    e += Expr::term(World::Shifted, rc(Rational(1, 2) / (lambda - j)), 0, h);
    // t Q_{j-1}(1 - t^2) / (1 - t^2)^j (r - t) D^{h/2}
    const RatFunc c = t * RatFunc(Q[static_cast<size_t>(j - 1)].compose(w)) * bold_t_power(-j);
    e += Expr::term(World::Shifted, c, 1, h);
    e += Expr::term(World::Shifted, -(c * t), 0, h);
  }
  e += Expr::term(World::Shifted, rc(Rational(-1)), 0, 0, LogKind::LogB);
  return e;
}

Expr lemma1_integrand(const Rational& lambda) {
  const int h = -(2 * half_integer_J(lambda) + 3);
  Expr e = Expr::term(World::Shifted, rc(Rational(1)), -1, h);
  e += Expr::term(World::Shifted, rc(Rational(-1)), 1, h);
  e += Expr::term(World::Shifted, rc(Rational(-1)), -1, 0);
  return e;
}

Rational lemma2_a(int kappa, int J) {
  if (kappa < J || J < 0) throw DomainError("a^{kappa,J+1/2} needs kappa >= J >= 0");
  const int m = kappa - J;
  Rational num = sign(m) * Rational(double_factorial(2 * kappa - 1));
  Rational den = Rational(BigInt(1) << m) * Rational(factorial(m)) * Rational(double_factorial(2 * J - 1));
  return num / den;
}

std::vector<Rational> lemma2_a_iota(int kappa, int J) {
  const Rational a = lemma2_a(kappa, J);
  std::vector<Rational> c;
  if (kappa >= 1) c.push_back(-a);
  for (int i = 1; i < kappa; ++i)
    c.push_back((2 * (J - i) * c.back() - a * bin(J, i)) / (2 * i + 1));
  return c;
}

Expr lemma2_I(int k, int J) {
  if (k < 0 || J < 0) throw DomainError("lemma2_I needs k, J >= 0");
  Expr e(World::Lemma2);
  if (k % 2 == 1) {
    const int kappa = (k - 1) / 2;
    for (int i = 0; i <= kappa; ++i) {
      const Rational c = bin(kappa, i) * sign(kappa - i + 1) / (2 * (J - i) - 1);
      e += Expr::term(World::Lemma2, param_power(c, kappa - i), 0, -(2 * (J - i) - 1));
    }
    return e;
  }
  const int kappa = k / 2;
  if (kappa < J) {
    // (X^2/Q)^{J-i-1/2} read as X^{2J-2i-1} Q^{-(2J-2i-1)/2}
    for (int i = 0; i <= J - kappa - 1; ++i) {
      const Rational c = bin(J - kappa - 1, i) * sign(J - kappa - i - 1) / (2 * (J - i) - 1);
      const int m = 2 * (J - i) - 1;
      e += Expr::term(World::Lemma2, param_power(c, kappa - J), m, -m);
    }
    return e;
  }
  const auto ai = lemma2_a_iota(kappa, J);
  for (int i = 0; i < kappa; ++i)
    e += Expr::term(World::Lemma2, param_power(ai[static_cast<size_t>(i)], kappa - i - 1), 2 * i + 1, -(2 * J - 1));
  e += Expr::term(World::Lemma2, param_power(lemma2_a(kappa, J), kappa - J), 0, 0, LogKind::LogA);
  return e;
}

Expr lemma2_integrand(int k, int J) { return Expr::term(World::Lemma2, rc(Rational(1)), k, -(2 * J + 1)); }

Expr lemma3_calI(int L, int J) {
  if (L < 0 || J < 0) throw DomainError("lemma3_calI needs L, J >= 0");
  Expr e(World::Shifted);
  for (int k = 0; k <= L; ++k)
    e += lemma2_I(k, J).substitute_shift().scaled(RatFunc(RationalPoly::monomial(bin(L, k), L - k)));
  return e;
}

Rational lemma3_mu(int kappa, int L, int J) { return bin(L, 2 * kappa) * lemma2_a(kappa, J); }

RatFunc lemma3_B(int L, int J) {
  RatFunc b;
  for (int kappa = J; kappa <= L / 2; ++kappa)
    b += RatFunc(RationalPoly::monomial(lemma3_mu(kappa, L, J), L - 2 * kappa)) * bold_t_power(kappa - J);
  return b;
}

Expr lemma3_direct(int L, int J) {
  if (L < 0 || J < 0) throw DomainError("lemma3_direct needs L, J >= 0");
  // pieces built in the Lemma2 world (bold t, bold R), then shifted and
  // multiplied by their power of the plain t
  Expr e(World::Shifted);
  auto piece = [&](const Rational& c, int bold_t, int bold_R, int h, int plain_t) {
    Expr p = Expr::term(World::Lemma2, param_power(c, bold_t), bold_R, h).substitute_shift();
    e += p.scaled(RatFunc(RationalPoly::monomial(Rational(1), plain_t)));
  };
  // A / (D^{J-1/2} T^J): every piece carries D^{-(2J-1)/2} T^{-J}
  for (int kappa = 0; kappa <= J - 1 && 2 * kappa <= L; ++kappa)
    for (int i = 0; i <= J - kappa - 1; ++i) {
      const Rational alpha = bin(L, 2 * kappa) * bin(J - kappa - 1, i) * sign(J - kappa - i - 1) / (2 * (J - i) - 1);
      piece(alpha, kappa - J, 2 * J - 2 * i - 1, 2 * i - (2 * J - 1), L - 2 * kappa);
    }
  for (int kappa = J; kappa <= L / 2; ++kappa) {
    const auto ai = lemma2_a_iota(kappa, J);
    for (int i = 0; i <= kappa - 1; ++i)
      piece(bin(L, 2 * kappa) * ai[static_cast<size_t>(i)], kappa - i - 1, 2 * i + 1, -(2 * J - 1), L - 2 * kappa);
  }
  for (int kappa = 0; kappa <= (L - 1) / 2 && L >= 1; ++kappa)
    for (int i = 0; i <= kappa; ++i) {
      const Rational gamma = bin(L, 2 * kappa + 1) * bin(kappa, i) * sign(kappa - i + 1) / (2 * (J - i) - 1);
      piece(gamma, kappa - i, 0, 2 * i - (2 * J - 1), L - 2 * kappa - 1);
    }
  e += Expr::term(World::Shifted, lemma3_B(L, J), 0, 0, LogKind::LogA);
  return e;
}

Expr lemma3_integrand(int L, int J) { return Expr::term(World::Shifted, rc(Rational(1)), L, -(2 * J + 1)); }

std::vector<RationalPoly> lemma4_pi(int k) {
  if (k < 1) throw UnsupportedError("the log antiderivative needs k >= 1");
  // index k holds the zero polynomial
  std::vector<RationalPoly> p(static_cast<size_t>(k) + 1);
  p[static_cast<size_t>(k - 1)] = RationalPoly::constant(Rational(1, k * (k + 1)));
  const RationalPoly t = RationalPoly::x();
  for (int j = k - 2; j >= 0; --j)
    p[static_cast<size_t>(j)] = ((2 * j + 3) * t * p[static_cast<size_t>(j + 1)] -
                                  Rational(j + 2) * p[static_cast<size_t>(j + 2)]) *
                                 Rational(1, j + 1);
  p.pop_back();
  return p;
}

RationalPoly lemma4_q(int k) {
  const auto p = lemma4_pi(k);
  RationalPoly q = RationalPoly::x() * p[0];
  if (k >= 2) q -= p[1];
  return q;
}

Expr lemma4_log_integral(int k) {
  const auto p = lemma4_pi(k);
  Expr e(World::Shifted);
  for (int j = 0; j < k; ++j) e += Expr::term(World::Shifted, RatFunc(p[static_cast<size_t>(j)]), j, 1);
  e += Expr::term(World::Shifted, RatFunc(lemma4_q(k)), 0, 0, LogKind::LogA);
  e += Expr::term(World::Shifted, rc(Rational(1, k + 1)), k + 1, 0, LogKind::LogB);
  e += Expr::term(World::Shifted, rc(Rational(-1, (k + 1) * (k + 1))), k + 1, 0);
  return e;
}

Expr log_integral_k0() {
  Expr e = Expr::term(World::Shifted, rc(Rational(1)), 1, 0, LogKind::LogB);
  e += Expr::term(World::Shifted, rc(Rational(-1)), 1, 0);
  e += Expr::term(World::Shifted, rc(Rational(1)), 0, 0, LogKind::LogA);
  return e;
}

Expr lemma4_integrand(int k) {
  if (k < 0) throw DomainError("k must be >= 0");
  return Expr::term(World::Shifted, rc(Rational(1)), k, 0, LogKind::LogB);
}

}  // namespace spherepde
