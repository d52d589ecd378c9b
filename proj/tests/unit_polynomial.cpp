#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "symtrace/polynomial.hpp"

using namespace symtrace;

namespace {

RatPoly r2(int n) {
  RatPoly s(n);
  for (int i = 1; i <= n; ++i) {
    const RatPoly v = RatPoly::variable(n, i);
    s = s + v * v;
  }
  return s;
}

}  // namespace

TEST_CASE("construction and degree bookkeeping") {
  const RatPoly x = RatPoly::variable(2, 1);
  const RatPoly y = RatPoly::variable(2, 2);
  const RatPoly p = x * x + y * y.scale(Rat(2, 3));
  CHECK(p.vars() == 2);
  CHECK(p.degree() == 2);
  int deg = -1;
  CHECK(p.is_homogeneous(&deg));
  CHECK(deg == 2);
  CHECK(!(p + RatPoly::constant(2, Rat(1))).is_homogeneous());

  Rat c;
  CHECK(RatPoly::constant(2, Rat(7, 3)).is_constant(&c));
  CHECK(c == Rat(7, 3));
  CHECK(RatPoly(2).is_zero());
  CHECK(RatPoly(2).degree() == -1);
}

TEST_CASE("ring operations agree with pointwise evaluation") {
  const RatPoly x = RatPoly::variable(3, 1);
  const RatPoly y = RatPoly::variable(3, 2);
  const RatPoly z = RatPoly::variable(3, 3);
  const RatPoly p = (x + y.scale(Rat(-2))) * (z * z + x.scale(Rat(1, 2)));
  const std::vector<double> at{1.5, -0.25, 2.0};
  const double lhs = p.eval(at);
  const double rhs = (1.5 - 2.0 * -0.25) * (4.0 + 0.75);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));

  CHECK((p - p).is_zero());
  const RatPoly q = x.pow(3);
  CHECK(q.degree() == 3);
  CHECK(q.eval(at) == doctest::Approx(3.375).epsilon(1e-14));
}

TEST_CASE("parity split covers the polynomial") {
  const RatPoly x = RatPoly::variable(2, 1);
  const RatPoly y = RatPoly::variable(2, 2);
  const RatPoly p = x * x + x * y * y + y + RatPoly::constant(2, Rat(5));
  const RatPoly e = p.even_part();
  const RatPoly o = p.odd_part();
  CHECK((e + o) == p);
  for (const auto& [expo, c] : e.terms()) {
    unsigned total = 0;
    for (unsigned k : expo) total += k;
    CHECK(total % 2 == 0);
  }
  for (const auto& [expo, c] : o.terms()) {
    unsigned total = 0;
    for (unsigned k : expo) total += k;
    CHECK(total % 2 == 1);
  }
}

TEST_CASE("sphere canonical form identifies |xi|^2 with 1") {
  CHECK(r2(2).sphere_canonical() == RatPoly::constant(2, Rat(1)));
  CHECK(r2(3).sphere_canonical() == RatPoly::constant(3, Rat(1)));

  const RatPoly x = RatPoly::variable(2, 1);
  const RatPoly y = RatPoly::variable(2, 2);
  // xi1^2 and 1 - xi2^2 are the same function on the circle
  CHECK((x * x).equal_on_sphere(RatPoly::constant(2, Rat(1)) - y * y));
  CHECK((x * x - y * y + RatPoly::constant(2, Rat(-1)) + (y * y).scale(Rat(2)))
            .equal_on_sphere(x * x + y * y - RatPoly::constant(2, Rat(1))));
  CHECK(!(x * y).is_zero_on_sphere());
  CHECK((r2(2) - RatPoly::constant(2, Rat(1))).is_zero_on_sphere());
}

TEST_CASE("canonicalization preserves parity and homogenization restores degree") {
  const RatPoly x = RatPoly::variable(3, 1);
  const RatPoly p = x.pow(4); // even
  const RatPoly c = p.sphere_canonical();
  for (const auto& [expo, coef] : c.terms()) {
    unsigned total = 0;
    for (unsigned k : expo) total += k;
    CHECK(total % 2 == 0);
  }
  // Homogenized canonical form is the same sphere function again
  const RatPoly h = c.homogenized();
  int deg = -1;
  CHECK(h.is_homogeneous(&deg));
  CHECK(h.equal_on_sphere(p));
}

TEST_CASE("coefficient mass bounds the sup norm on the sphere") {
  const RatPoly x = RatPoly::variable(2, 1);
  const RatPoly y = RatPoly::variable(2, 2);
  const RatPoly p = (x * y).scale(Rat(-3)) + x.pow(2).scale(Rat(1, 2));
  CHECK(p.coeff_abs_sum() == Rat(7, 2));
  // |p| at a sphere point never exceeds it
  const double v = p.eval(std::vector<double>{0.6, 0.8});
  CHECK(std::abs(v) <= 3.5);
}
