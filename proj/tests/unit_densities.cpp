#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "symtrace/densities.hpp"
#include "symtrace/parser.hpp"

using namespace symtrace;

namespace {

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

// Closed forms verified by hand from the radial integrals:
//   critical degree d = -n contributes (sphere moment)/K * (2pi)^-n,
//   d < -n contributes the absolutely convergent two-piece integral,
//   d > -n the inside-ball difference of realized and strict term.
TEST_CASE("finite part closed forms") {
  CHECK(finite_part(parse_symbol("1/|xi|^1", 1))
            .exact_equal(ScalarValue::exact(Rat(1, 2), -1)));
  CHECK(finite_part(parse_symbol("xi1^2/|xi|^4", 1))
            .exact_equal(ScalarValue::exact(Rat(2), -1)));
  CHECK(finite_part(parse_symbol("xi1^2/|xi|^4", 2))
            .exact_equal(ScalarValue::exact(Rat(1, 8), -1)));
  CHECK(finite_part(parse_symbol("xi1^2/|xi|^3; 1/|xi|^2", 1))
            .exact_equal(ScalarValue::exact(Rat(5, 2), -1)));
}

TEST_CASE("residue density closed forms") {
  CHECK(residue_density(parse_symbol("1/|xi|^1", 1))
            .exact_equal(ScalarValue::exact(Rat(1), -1)));
  CHECK(residue_density(parse_symbol("xi1^2/|xi|^4", 2))
            .exact_equal(ScalarValue::exact(Rat(1, 4), -1)));
  CHECK(residue_density(parse_symbol("1/|xi|^3", 3))
            .exact_equal(ScalarValue::exact(Rat(1, 2), -2)));
  // no degree -n component, residue exactly zero
  CHECK(residue_density(parse_symbol("xi1^2/|xi|^4", 1)).is_zero());
  CHECK(residue_density(parse_symbol("xi1^2", 2)).is_zero());
}

TEST_CASE("finite part is additive over terms") {
  const ScalarValue whole = finite_part(parse_symbol("xi1^2/|xi|^3; 1/|xi|^2", 1));
  const ScalarValue t1 = finite_part(parse_symbol("xi1^2/|xi|^3", 1));
  const ScalarValue t2 = finite_part(parse_symbol("1/|xi|^2", 1));
  CHECK(whole.exact_equal(t1 + t2));
}

TEST_CASE("residue ignores the extension, finite part sees it") {
  const ClassicalSymbol a = parse_symbol("1/|xi|^1", 1);
  const ClassicalSymbol b = a.with_extension_bump(2);
  CHECK(residue_density(a).exact_equal(residue_density(b)));
  // K = 2 gives S/K = 1, K = 4 halves the critical row
  CHECK(finite_part(b).exact_equal(ScalarValue::exact(Rat(1, 4), -1)));
  CHECK(!finite_part(a).exact_equal(finite_part(b)));
}

TEST_CASE("radius expansion rows reproduce the ball integral") {
  // int_{|xi|<=R} of 1/|xi| (realized) in n=1: log row + constant row
  const auto rows = radius_expansion(parse_symbol("1/|xi|^1", 1));
  REQUIRE(rows.size() == 2);
  CHECK(rows.front().exponent == Rat(0));
  CHECK(rows.front().log_power == 1);
  CHECK(rows.front().coeff.exact_equal(ScalarValue::exact(Rat(1), -1)));
  CHECK(rows.back().log_power == 0);
  CHECK(rows.back().coeff.exact_equal(ScalarValue::exact(Rat(1, 2), -1)));

  // growing symbol: rows evaluated at R = 2 must equal the explicit ball
  // integral 2/(2pi) * (R^3/3 + R); K = 0, so realized == strict
  const auto grows = radius_expansion(parse_symbol("xi1^2; 1", 1));
  double at2 = 0.0;
  const double r = 2.0;
  for (const auto& row : grows)
    at2 += row.coeff.to_double() * std::pow(r, row.exponent.get_d()) *
           (row.log_power ? std::log(r) : 1.0);
  const double direct = (2.0 / (2.0 * M_PI)) * (8.0 / 3.0 + 2.0);
  CHECK(at2 == doctest::Approx(direct).epsilon(1e-14));
}

TEST_CASE("finite part by radius agrees exactly with the closed form") {
  for (const char* text : {"1/|xi|^1", "xi1^2/|xi|^4", "xi1^2; 1",
                           "xi1^2/|xi|^3; 1/|xi|^2"}) {
    const ClassicalSymbol a = parse_symbol(text, 1);
    CHECK(finite_part_by_radius(a, 3).exact_equal(finite_part(a)));
    CHECK(finite_part_by_radius(a.with_extension_bump(2), 2)
              .exact_equal(finite_part(a.with_extension_bump(2))));
  }
  const ClassicalSymbol a2 = parse_symbol("xi1^2/|xi|^4; 1/|xi|^3", 2);
  CHECK(finite_part_by_radius(a2, 4).exact_equal(finite_part(a2)));
}

TEST_CASE("parity classes and vanishing") {
  CHECK(parity_class(parse_symbol("xi1/|xi|^2; xi1^2/|xi|^4", 1)) ==
        ParityClass::EvenEven);
  CHECK(parity_class(parse_symbol("xi1^2/|xi|^3; xi1^3/|xi|^5", 2)) ==
        ParityClass::EvenOdd);
  CHECK(parity_class(parse_symbol("1/|xi|^1", 1)) == ParityClass::EvenOdd);
  CHECK(parity_class(parse_symbol("xi1/|xi|^2; 1/|xi|^1", 1)) ==
        ParityClass::Neither);

  // even-even in odd dimension kills the residue
  CHECK(residue_density(parse_symbol("xi1/|xi|^2; xi1^2/|xi|^4", 1)).is_zero());
  // even-odd in even dimension likewise
  CHECK(residue_density(parse_symbol("xi1^2/|xi|^3; xi1^3/|xi|^5", 2)).is_zero());
}

TEST_CASE("log-weight residue density") {
  const ClassicalSymbol a = parse_symbol("1/|xi|^1", 1);
  ClassicalSymbol p1 = parse_symbol("xi1^2; 1", 1);
  ClassicalSymbol p4 = parse_symbol("4*xi1^2; 1", 1);

  // log(|xi|^2 + 1) has no degree -1 component against a flat a
  CHECK(residue0_log(a, series_log(p1, 8)).is_zero());

  // scaling the leading coefficient shifts it by log(c) * residue
  const ScalarValue shifted = residue0_log(a, series_log(p4, 8));
  const ScalarValue expect =
      residue_density(a) * ScalarValue::log_of_rat(Rat(4));
  CHECK(shifted.approx_equal(expect, 1e-25));
  CHECK(!shifted.is_zero());

  // truncated too shallow for the product degree: refuses loudly
  const ClassicalSymbol high = parse_symbol("xi1^4", 1);
  CHECK(kind_of([&] { residue0_log(high, series_log(p1, 3)); }) ==
        ErrorKind::Truncation);
}

TEST_CASE("density report rows sum to the finite part") {
  const ClassicalSymbol a = parse_symbol("xi1^2; xi1; 1/|xi|^1; 1/|xi|^2", 1);
  const DensityReport rep = density_report(a);
  REQUIRE(rep.rows.size() == 4);
  ScalarValue sum = ScalarValue::zero();
  for (const auto& row : rep.rows) sum += row.value;
  CHECK(sum.exact_equal(rep.tr_x));
  CHECK(rep.tr_x.exact_equal(finite_part(a)));
  CHECK(rep.res_x.exact_equal(residue_density(a)));
  CHECK(!rep.res_x0_log.has_value());

  // branches follow the degree relative to -n
  CHECK(rep.rows.at(0).branch == FpBranch::BallDifference);
  CHECK(rep.rows.at(1).branch == FpBranch::BallDifference);
  CHECK(rep.rows.at(2).branch == FpBranch::BallLog);
  CHECK(rep.rows.at(3).branch == FpBranch::Absolute);
}
