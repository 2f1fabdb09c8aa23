#include "spherepde/closed_form.hpp"
#include "spherepde/derive.hpp"
#include "spherepde/errors.hpp"
#include "spherepde/expr.hpp"
#include "spherepde/lemmas.hpp"
#include "spherepde/poisson.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

using namespace spherepde;
using doctest::Approx;

namespace {

Rational q(long long a, long long b = 1) { return Rational(a, b); }

// Central difference of F against the integrand g; independent of Expr::derivative.
void check_antiderivative(const Expr& F, const std::function<double(double, double)>& g, double xlo, double xhi,
                          double plo, double phi, int points = 50) {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> X(xlo, xhi), P(plo, phi);
  const NumericExpr f(F);
  for (int i = 0; i < points; ++i) {
    const double x = X(rng), p = P(rng), h = 1e-5;
    const double fd = (f(x + h, p) - f(x - h, p)) / (2 * h);
    CHECK(fd == Approx(g(x, p)).epsilon(1e-6).scale(1.0));
  }
}

// Exact differentiation closure plus numeric residual at random points.
void check_closure(const Expr& F, const Expr& integrand, const std::function<double(double, double)>& g,
                   double xlo, double xhi, double plo, double phi) {
  CHECK((F.derivative() - integrand).is_zero());
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> X(xlo, xhi), P(plo, phi);
  const NumericExpr d(F.derivative());
  for (int i = 0; i < 50; ++i) {
    const double x = X(rng), p = P(rng);
    CHECK(d(x, p) == Approx(g(x, p)).epsilon(1e-10).scale(1.0));
  }
  check_antiderivative(F, g, xlo, xhi, plo, phi, 10);
}

}  // namespace

TEST_CASE("rational polynomials") {
  const RationalPoly a{q(1), q(2)}, b{q(-1), q(0), q(3)};
  CHECK((a * b).coeffs() == std::vector<Rational>{q(-1), q(-2), q(3), q(6)});
  CHECK((a + b).degree() == 2);
  CHECK((b - b).is_zero());
  CHECK(b.derivative() == RationalPoly{q(0), q(6)});
  CHECK(a.compose(b) == RationalPoly{q(-1), q(0), q(6)});
  CHECK(b.eval(q(1, 2)) == q(-1, 4));
  RationalPoly quo, rem;
  (a * b + RationalPoly{q(5)}).divmod(b, quo, rem);
  CHECK(quo == a);
  CHECK(rem == RationalPoly{q(5)});
  CHECK(gcd(a * b, a * RationalPoly{q(7), q(1)}) == a.monic());
  CHECK(RationalPoly::parse(b.serialize()) == b);
  CHECK(b.render("t") == "-1 + 3*t^2");
  CHECK(b.has_only_parity(0));
  CHECK_THROWS_AS(RationalPoly::parse("[1,,2]"), ParseError);
  CHECK(parse_rational("-3/6") == q(-1, 2));
  CHECK(to_string(q(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);

  const RatFunc r(RationalPoly{q(1), q(-1)}, RationalPoly{q(2), q(-2)});
  CHECK(r == RatFunc(q(1, 2)));
  const RatFunc s(RationalPoly{q(1)}, RationalPoly{q(0), q(1)});
  CHECK(s.derivative() == RatFunc(RationalPoly{q(-1)}, RationalPoly{q(0), q(0), q(1)}));
  CHECK(RatFunc::power_of_x(-2) == s * s);
  CHECK((s * s).den().leading() == q(1));
  CHECK_THROWS(RatFunc(RationalPoly{q(1)}, RationalPoly{}));
}

TEST_CASE("radial antiderivative of the Poisson kernel") {
  const auto q32 = lemma1_Q(q(3, 2));
  REQUIRE(q32.size() == 1);
  CHECK(q32[0] == RationalPoly{q(1)});
  const auto q52 = lemma1_Q(q(5, 2));
  REQUIRE(q52.size() == 2);
  CHECK(q52[0] == RationalPoly{q(1, 3)});
  CHECK(q52[1] == RationalPoly{q(2, 3), q(1)});
  CHECK_THROWS_AS(lemma1_Q(q(2)), DomainError);
  for (int twice = 1; twice <= 11; twice += 2) {
    const Rational lam(twice, 2);
    const double ld = twice / 2.0;
    auto g = [ld](double r, double t) { return (1 - r * r) / (r * std::pow(1 - 2 * t * r + r * r, ld + 1)) - 1 / r; };
    check_closure(lemma1_antiderivative(lam), lemma1_integrand(lam), g, 0.1, 0.9, -0.9, 0.9);
  }
}

TEST_CASE("powers over half-integer powers of T + X^2") {
  CHECK((lemma2_I(0, 0) - Expr::term(World::Lemma2, RatFunc(q(1)), 0, 0, LogKind::LogA)).is_zero());
  for (int J = 1; J <= 4; ++J)
    CHECK((lemma2_I(1, J) - Expr::term(World::Lemma2, RatFunc(q(-1, 2 * J - 1)), 0, -(2 * J - 1))).is_zero());
  const Expr k2 = Expr::term(World::Lemma2, RatFunc(q(-1)), 1, -1) + Expr::term(World::Lemma2, RatFunc(q(1)), 0, 0, LogKind::LogA);
  CHECK((lemma2_I(2, 1) - k2).is_zero());
  for (int k = 0; k <= 6; ++k)
    for (int J = 0; J <= 4; ++J) {
      auto g = [k, J](double x, double T) { return std::pow(x, k) / std::pow(T + x * x, J + 0.5); };
      check_closure(lemma2_I(k, J), lemma2_integrand(k, J), g, -1.5, 1.5, 0.2, 2.0);
    }
}

TEST_CASE("shifted antiderivatives") {
  CHECK((lemma3_calI(0, 0) - Expr::term(World::Shifted, RatFunc(q(1)), 0, 0, LogKind::LogA)).is_zero());
  for (int L = 0; L <= 4; ++L)
    for (int J = 0; J <= 3; ++J) {
      auto g = [L, J](double R, double t) { return std::pow(R, L) / std::pow(1 - 2 * t * R + R * R, J + 0.5); };
      check_closure(lemma3_calI(L, J), lemma3_integrand(L, J), g, 0.0, 1.0, -0.9, 0.9);
      CHECK((lemma3_calI(L, J) - lemma3_direct(L, J)).is_zero());
      for (int kappa = J; 2 * kappa <= L; ++kappa)
        CHECK(lemma3_mu(kappa, L, J) == Rational(binomial(long(L), 2L * kappa)) * lemma2_a(kappa, J));
    }
}

TEST_CASE("logarithmic antiderivatives") {
  const auto p1 = lemma4_pi(1);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0] == RationalPoly{q(1, 2)});
  const auto p2 = lemma4_pi(2);
  REQUIRE(p2.size() == 2);
  CHECK(p2[1] == RationalPoly{q(1, 6)});
  CHECK(p2[0] == RationalPoly{q(0), q(1, 2)});
  CHECK(lemma4_q(1) == RationalPoly{q(0), q(1, 2)});
  for (int k = 1; k <= 8; ++k) {
    CHECK(lemma4_pi(k).size() == static_cast<size_t>(k));
    auto g = [k](double R, double t) {
      return std::pow(R, k) * std::log(1 - t * R + std::sqrt(1 - 2 * t * R + R * R));
    };
    check_closure(lemma4_log_integral(k), lemma4_integrand(k), g, 0.0, 1.0, -0.9, 0.9);
  }
  auto g0 = [](double R, double t) { return std::log(1 - t * R + std::sqrt(1 - 2 * t * R + R * R)); };
  check_closure(log_integral_k0(), lemma4_integrand(0), g0, 0.0, 1.0, -0.9, 0.9);
  CHECK_THROWS_AS(lemma4_pi(0), UnsupportedError);
}

TEST_CASE("expression algebra") {
  const Expr a = Expr::term(World::Shifted, RatFunc(q(2)), 3, 1, LogKind::None);
  CHECK(a.size() == 1);
  CHECK((a - a).is_zero());
  // Q^{1/2} Q^{-1/2} = 1, canonical form notices
  const Expr one = Expr::term(World::Shifted, RatFunc(q(1)), 0, 0).times_q(1).times_q(-1);
  CHECK((one - Expr::term(World::Shifted, RatFunc(q(1)), 0, 0)).is_zero());
  // Q^{1/2} vs Q^{-1/2}(1 - 2tR + R^2)
  const Expr lhs = Expr::term(World::Shifted, RatFunc(q(1)), 0, 1);
  const Expr rhs = Expr::term(World::Shifted, RatFunc(q(1)), 0, -1) +
                   Expr::term(World::Shifted, RatFunc(RationalPoly{q(0), q(-2)}), 1, -1) +
                   Expr::term(World::Shifted, RatFunc(q(1)), 2, -1);
  CHECK((lhs - rhs).is_zero());
  CHECK(a.eval(0.5, 0.2) == Approx(2 * 0.125 * std::sqrt(1 - 0.2 + 0.25)));
  CHECK(NumericExpr(a)(0.5, 0.2) == Approx(a.eval(0.5, 0.2)).epsilon(1e-15));
  // shift of the Lemma2 world
  const Expr l2 = lemma2_I(2, 1);
  const Expr sh = l2.substitute_shift();
  const double R = 0.4, t = 0.3;
  CHECK(sh.eval(R, t) == Approx(l2.eval(R - t, 1 - t * t)).epsilon(1e-13));
  CHECK_FALSE(a.render().empty());
  CHECK_THROWS(a + Expr::term(World::Lemma2, RatFunc(q(1)), 0));
}

TEST_CASE("even-dimension derivation") {
  const ClosedFormZonal k2(RationalPoly{q(1)}, RationalPoly{q(1)}, RationalPoly{q(1)}, RationalPoly{}, 0);
  const ClosedFormZonal k4(RationalPoly{q(4, 9), q(-7, 9)}, RationalPoly{q(1), q(-1)}, RationalPoly{q(1, 3)}, RationalPoly{}, 0);
  const ClosedFormZonal k6(RationalPoly{q(23, 75), q(-71, 75), q(43, 75)}, RationalPoly{q(1), q(-2), q(1)},
                           RationalPoly{q(1, 5)}, RationalPoly{}, 0);
  CHECK((derive_kernel_K_even(2) - k2).is_zero());
  CHECK((derive_kernel_K_even(4) - k4).is_zero());
  CHECK((derive_kernel_K_even(6) - k6).is_zero());
  for (int n = 4; n <= 10; n += 2) CHECK((derive_kernel_K_even(n) - table_kernel_K(n)).is_zero());
  CHECK((derive_kernel_K_even(2) - table_kernel_K(2)).is_zero());
  for (int n : {2, 4, 6, 8, 10, 12}) {
    const auto K = derive_kernel_K_even(n);
    for (int i = 0; i < 25; ++i) {
      const double t = -0.95 + 1.75 * i / 24.0;
      CHECK(K.eval(t) == Approx(kernel_K_integral(DimensionContext(n), t)).scale(1.0).epsilon(1e-8));
    }
  }
  CHECK_THROWS_AS(derive_kernel_K_even(3), UnsupportedError);
  CHECK_THROWS_AS(derive_kernel_K_even(14), UnsupportedError);
  CHECK_THROWS_AS(derive_kernel_K_even(0), UnsupportedError);
  // gamma is an antiderivative of (Sigma_n p_R - 1)/R
  for (int n : {2, 4, 6}) {
    const double lam = 0.5 * (n - 1);
    auto g = [lam](double R, double t) { return ((1 - R * R) / std::pow(1 - 2 * t * R + R * R, lam + 1) - 1) / R; };
    check_antiderivative(derive_gamma(n), g, 0.1, 0.9, -0.9, 0.9, 20);
  }
}
