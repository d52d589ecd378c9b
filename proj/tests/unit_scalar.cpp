#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "symtrace/scalar.hpp"

using namespace symtrace;

TEST_CASE("exact rational arithmetic stays exact") {
  const ScalarValue a = ScalarValue::exact(Rat(1, 2));
  const ScalarValue b = ScalarValue::exact(Rat(1, 3));
  const ScalarValue s = a + b;
  REQUIRE(s.is_exact());
  CHECK(s.rational() == Rat(5, 6));
  CHECK(s.pi_power() == 0);

  const ScalarValue p = a * b;
  REQUIRE(p.is_exact());
  CHECK(p.rational() == Rat(1, 6));

  const ScalarValue d = (a - b) - ScalarValue::exact(Rat(1, 6));
  CHECK(d.is_zero());
}

TEST_CASE("pi powers multiply and track through division") {
  const ScalarValue pi1 = ScalarValue::exact(Rat(1), 1);
  const ScalarValue inv = ScalarValue::exact(Rat(2), -1);
  const ScalarValue prod = pi1 * inv;
  REQUIRE(prod.is_exact());
  CHECK(prod.pi_power() == 0);
  CHECK(prod.rational() == Rat(2));

  const ScalarValue q = pi1.div(inv);
  REQUIRE(q.is_exact());
  CHECK(q.pi_power() == 2);
  CHECK(q.rational() == Rat(1, 2));

  // 1/pi as a decimal
  const ScalarValue ip = ScalarValue::exact(Rat(1), -1);
  CHECK(ip.to_double() == doctest::Approx(0.3183098861837907).epsilon(1e-14));
}

TEST_CASE("adding exact values of different pi power degrades to numeric") {
  const ScalarValue a = ScalarValue::exact(Rat(1), 1);
  const ScalarValue b = ScalarValue::exact(Rat(1), 0);
  const ScalarValue s = a + b;
  CHECK(!s.is_exact());
  CHECK(s.to_double() == doctest::Approx(M_PI + 1.0).epsilon(1e-14));
  CHECK(s.error_bound().to_double() >= 0.0);
}

TEST_CASE("log_of_rat carries a tight error bound") {
  const ScalarValue l = ScalarValue::log_of_rat(Rat(4));
  CHECK(!l.is_exact());
  CHECK(l.to_double() == doctest::Approx(1.3862943611198906).epsilon(1e-14));
  CHECK(l.error_bound().to_double() < 1e-20);

  // log(1) is exactly zero
  CHECK(ScalarValue::log_of_rat(Rat(1)).is_zero());
}

TEST_CASE("is_zero means exactly zero, not merely small") {
  CHECK(ScalarValue::zero().is_zero());
  CHECK(!ScalarValue::numeric(BigFloat(0.0), BigFloat(1e-30)).is_zero());
  CHECK(!ScalarValue::exact(Rat(1, 1000000)).is_zero());
}

TEST_CASE("exact_equal is structural, approx_equal takes an absolute tolerance") {
  const ScalarValue a = ScalarValue::exact(Rat(1, 2), -1);
  const ScalarValue b = ScalarValue::exact(Rat(1, 2), -1);
  const ScalarValue c = ScalarValue::exact(Rat(1, 2), 0);
  CHECK(a.exact_equal(b));
  CHECK(!a.exact_equal(c));

  const ScalarValue x = ScalarValue::numeric(BigFloat(1.0), BigFloat(1e-18));
  const ScalarValue y = ScalarValue::numeric(BigFloat(1.0 + 1e-9), BigFloat(1e-18));
  CHECK(x.approx_equal(y, 1e-8));
  CHECK(!x.approx_equal(y, 1e-10));
}

TEST_CASE("error bounds add under arithmetic") {
  const ScalarValue x = ScalarValue::numeric(BigFloat(1.0), BigFloat(1e-10));
  const ScalarValue y = ScalarValue::numeric(BigFloat(2.0), BigFloat(1e-10));
  const ScalarValue s = x + y;
  CHECK(s.error_bound().to_double() >= 2e-10);
  const ScalarValue p = x * y;
  CHECK(p.error_bound().to_double() >= 2e-10);
}

TEST_CASE("mul_rat and div_rat preserve exactness") {
  const ScalarValue a = ScalarValue::exact(Rat(3, 4), 2);
  const ScalarValue m = a.mul_rat(Rat(2, 3));
  REQUIRE(m.is_exact());
  CHECK(m.rational() == Rat(1, 2));
  CHECK(m.pi_power() == 2);
  const ScalarValue d = a.div_rat(Rat(3));
  REQUIRE(d.is_exact());
  CHECK(d.rational() == Rat(1, 4));
}

TEST_CASE("to_string shows exact values symbolically") {
  const ScalarValue a = ScalarValue::exact(Rat(1, 2), -1);
  const std::string s = a.to_string();
  CHECK(s.find("1/2") != std::string::npos);
  CHECK(s.find("pi") != std::string::npos);
}
