#include "spherepde/closed_form.hpp"
#include "spherepde/errors.hpp"
#include "spherepde/helmholtz.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace spherepde;
using doctest::Approx;

namespace {

std::vector<const ClosedFormZonal*> all_tables() {
  std::vector<const ClosedFormZonal*> v;
  for (int n = 2; n <= 10; ++n) v.push_back(&table_kernel_K(n));
  for (int n = 2; n <= 8; ++n)
    for (int L = 1; L <= 4; ++L) v.push_back(&table_green_GL(n, L));
  return v;
}

}  // namespace

TEST_CASE("table coverage") {
  for (int n = 2; n <= 10; ++n) CHECK(has_table_kernel_K(n));
  CHECK_FALSE(has_table_kernel_K(11));
  CHECK_FALSE(has_table_kernel_K(1));
  CHECK(has_table_green_GL(8, 4));
  CHECK_FALSE(has_table_green_GL(9, 1));
  CHECK_FALSE(has_table_green_GL(3, 5));
  CHECK_THROWS_AS(table_kernel_K(11), UnsupportedError);
  CHECK(table_green_GL(2, 0) == table_kernel_K(2));
}

TEST_CASE("serialization round trip") {
  for (const auto* f : all_tables()) {
    const auto text = f->serialize();
    const auto back = ClosedFormZonal::parse(text);
    CHECK(back == *f);
    CHECK(back.serialize() == text);
    CHECK_FALSE(f->render().empty());
  }
  const ClosedFormZonal c(RationalPoly{Rational(1)}, RationalPoly{Rational(1)}, RationalPoly{}, RationalPoly{}, 0, Rational(3, 7));
  const auto back = ClosedFormZonal::parse(c.serialize());
  CHECK(back == c);
  CHECK(c.serialize().find("const{value=3/7}") != std::string::npos);
  CHECK(table_kernel_K(4).serialize() == "rat{num=[-4/9,7/9];den=[-1,1]} + log{coef=[1/3]}");
  CHECK_THROWS_AS(ClosedFormZonal::parse("rat{num=[1]}"), ParseError);
  CHECK_THROWS_AS(ClosedFormZonal::parse("rat{num=[1];den=[1]} + bogus{}"), ParseError);
  CHECK_THROWS_AS(ClosedFormZonal::parse("rat{num=[1];den=[]}"), ParseError);
}

TEST_CASE("evaluation against term-by-term evaluation") {
  for (const auto* f : all_tables())
    for (int i = 0; i <= 40; ++i) {
      const double t = -0.9 + 1.8 * i / 40.0;
      CHECK(f->eval(t) == Approx(f->eval_direct(t, 1 - t)).scale(1.0).epsilon(1e-12));
    }
}

TEST_CASE("explicit formulas") {
  // K for n = 3 and G_1 for n = 3, written out by hand
  for (int i = 0; i <= 20; ++i) {
    const double t = -0.9 + 1.8 * i / 20.0, th = std::acos(t), s = std::sqrt(1 - t * t);
    CHECK(table_kernel_K(3).eval(t) == Approx(-(std::numbers::pi - th) * t / (2 * s) + 0.25).epsilon(1e-13));
    CHECK(table_green_GL(3, 1).eval(t) ==
          Approx((std::numbers::pi - th) * (1 - 2 * t * t) / (2 * s) + t / 4).epsilon(1e-13));
    CHECK(table_kernel_K(2).eval(t) == Approx(1 + std::log((1 - t) / 2)).epsilon(1e-14));
    CHECK(table_green_GL(2, 1).eval(t) == Approx(1 + 4.0 / 3 * t + t * std::log((1 - t) / 2)).scale(1.0).epsilon(1e-13));
  }
}

TEST_CASE("behaviour near the poles") {
  for (int n = 2; n <= 10; ++n) {
    const auto& K = table_kernel_K(n);
    CHECK_THROWS_AS(K.eval(1.0), SingularityError);
    CHECK_THROWS_AS(K.eval(1.0 - 1e-9), SingularityError);
    CHECK_THROWS_AS(K.eval(-1.0 - 1e-9), DomainError);
    const double at = K.eval(-1.0);
    CHECK(std::isfinite(at));
    // continuity at the antipode despite separately singular parts
    CHECK(K.eval(-1.0 + 1e-7) == Approx(at).scale(1.0).epsilon(1e-5));
    CHECK(at == Approx(kernel_K_integral(DimensionContext(n), -1.0)).scale(1.0).epsilon(1e-7));
  }
  for (int n : {3, 5, 7, 9}) CHECK(table_kernel_K(n).has_minus_one_series());
}

TEST_CASE("algebra on closed forms") {
  const auto& a = table_kernel_K(4);
  CHECK((a - a).is_zero());
  const auto b = a + a;
  CHECK(b.eval(0.3) == Approx(2 * a.eval(0.3)).epsilon(1e-14));
  const ClosedFormZonal c(RationalPoly{Rational(1)}, RationalPoly{Rational(1)}, RationalPoly{}, RationalPoly{}, 0, Rational(2));
  CHECK(c.normalized().constant() == 0);
  CHECK(c.normalized().eval(0.1) == Approx(3.0));
  CHECK(c == c.normalized());
}
