#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "symtrace/densities.hpp"
#include "symtrace/oracle.hpp"
#include "symtrace/parser.hpp"
#include "symtrace/resolvent.hpp"

using namespace symtrace;

// int (xi^2 + 1 + 3)^{-1} dxi / (2pi) = (pi/2)/(2pi) = 1/4 exactly
TEST_CASE("numeric trace closed forms on the real axis") {
  const ClassicalSymbol one1 = parse_symbol("1", 1);
  const ClassicalSymbol p1 = parse_symbol("xi1^2; 1", 1);
  const ScalarValue t1 = numeric_trace(one1, p1, 1, -3.0);
  CHECK(t1.to_double() == doctest::Approx(0.25).epsilon(1e-11));
  CHECK(t1.error_bound().to_double() < 1e-9);

  // n = 2, N = 2: int (|xi|^2 + 4)^{-2} dxi/(2pi)^2 = 1/(16 pi)
  const ClassicalSymbol one2 = parse_symbol("1", 2);
  const ClassicalSymbol p2 = parse_symbol("xi1^2 + xi2^2; 1", 2);
  const ScalarValue t2 = numeric_trace(one2, p2, 2, -3.0);
  CHECK(t2.to_double() == doctest::Approx(1.0 / (16.0 * M_PI)).epsilon(1e-10));
}

TEST_CASE("numeric trace handles angular numerators and matrix symbols") {
  // int xi^2/(xi^2+1)^2 dxi/(2pi) at lambda = 0 ... shifted: use lambda = -1,
  // int xi^2/(xi^2+2)^2 dxi/(2pi) = (pi/(2 sqrt 2))/(2pi) = 1/(4 sqrt 2)
  const ClassicalSymbol a = parse_symbol("xi1^2", 1);
  const ClassicalSymbol p = parse_symbol("xi1^2; 1", 1);
  const ScalarValue v = numeric_trace(a, p, 2, -1.0);
  CHECK(v.to_double() ==
        doctest::Approx(1.0 / (4.0 * std::sqrt(2.0))).epsilon(1e-10));

  // diagonal matrix doubles the flat channel
  const ClassicalSymbol d = parse_symbol("diag(1, 1)", 1, 2);
  const ClassicalSymbol pd = parse_symbol("xi1^2; 1", 1, 2);
  const ScalarValue vd = numeric_trace(d, pd, 1, -3.0);
  CHECK(vd.to_double() == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("ray samples respect conjugate symmetry") {
  const ClassicalSymbol a = parse_symbol("1/|xi|^1", 1);
  const ClassicalSymbol p = parse_symbol("xi1^2; 1", 1);
  const double theta = 0.7853981633974483;  // pi/4
  const auto up = numeric_trace_ray(a, p, 1, 50.0L, theta, 1e-13L);
  const auto dn = numeric_trace_ray(a, p, 1, 50.0L, -theta, 1e-13L);
  CHECK(std::abs(up - std::conj(dn)) < 1e-11);
  // and the positive axis value is real
  const auto ax = numeric_trace_ray(a, p, 1, 50.0L, 0.0, 1e-13L);
  CHECK(std::fabs((double)ax.imag()) < 1e-11);
}

TEST_CASE("lattice sum cross-checks the integral at large |lambda|") {
  const ClassicalSymbol one1 = parse_symbol("1", 1);
  const ClassicalSymbol p1 = parse_symbol("xi1^2; 1", 1);
  const ScalarValue quad = numeric_trace(one1, p1, 2, -1000.0);
  const ScalarValue latt = lattice_trace(one1, p1, 2, -1000.0, 1e-12);
  const double rel = std::fabs(quad.to_double() - latt.to_double()) /
                     std::fabs(quad.to_double());
  CHECK(rel < 1e-6);
  CHECK(latt.error_bound().to_double() < 1e-10);
}

TEST_CASE("sampler produces the requested geometric ladder") {
  const ClassicalSymbol a = parse_symbol("1", 1);
  const ClassicalSymbol p = parse_symbol("xi1^2; 1", 1);
  RaySampler s;
  s.t0 = 32.0L;
  s.rho = 2.0L;
  s.tol = 1e-12L;
  const auto samples = sample_ray(a, p, 1, s, 3);
  REQUIRE(samples.size() == 7);  // ladder + 4
  for (size_t i = 0; i < samples.size(); ++i)
    CHECK((double)samples[i].t ==
          doctest::Approx(32.0 * std::pow(2.0, (double)i)));
  // the flat-symbol trace is 1/(2 sqrt(1+t)) on the axis
  for (const auto& smp : samples)
    CHECK((double)smp.value.real() ==
          doctest::Approx(0.5 / std::sqrt(1.0 + (double)smp.t)).epsilon(1e-10));
}

TEST_CASE("ladder fit recovers the symbolic coefficients") {
  const ClassicalSymbol a = parse_symbol("1", 1);
  const ClassicalSymbol p = parse_symbol("xi1^2; 1", 1);
  const AsymptoticExpansion e = model_trace_expansion(a, 2, 1);
  const auto ladder = fit_ladder(e);
  REQUIRE(!ladder.empty());
  // descending exponents
  for (size_t i = 1; i < ladder.size(); ++i)
    CHECK(ladder[i].exponent < ladder[i - 1].exponent);

  RaySampler s;
  s.t0 = 64.0L;
  s.rho = 4.0L;
  s.tol = 1e-13L;
  const auto samples = sample_ray(a, p, 1, s, (unsigned)ladder.size());
  FitReport rep = fit_expansion(samples, 0.0, ladder);
  CHECK(rep.ok);
  CHECK(rep.condition < 1e12);
  attach_reference(rep, e, 1e-6);
  // slots below t^{-N} sit under the series remainder; only the trusted
  // window is expected to round-trip
  for (const auto& row : rep.rows) {
    if (!row.has_symbolic || row.exponent < Rat(-1)) continue;
    CHECK(row.verdict == "ok");
    CHECK(row.rel_error < 1e-6);
  }
  // leading slot is t^{-1/2} with coefficient 1/2
  CHECK(rep.rows.front().exponent == Rat(-1, 2));
  CHECK(rep.rows.front().fitted == doctest::Approx(0.5).epsilon(1e-8));
}

TEST_CASE("off-axis fit sees the same real coefficients") {
  const ClassicalSymbol a = parse_symbol("1/|xi|^1", 1);
  const ClassicalSymbol p = parse_symbol("xi1^2; 1", 1);
  const AsymptoticExpansion e = model_trace_expansion(a, 2, 1);
  const auto ladder = fit_ladder(e);
  for (double theta : {0.0, 0.4, -0.4}) {
    RaySampler s;
    s.theta = theta;
    s.t0 = 64.0L;
    s.rho = 2.0L;
    s.tol = 1e-13L;
    const auto samples = sample_ray(a, p, 1, s, (unsigned)ladder.size());
    FitReport rep = fit_expansion(samples, theta, ladder);
    REQUIRE(rep.ok);
    attach_reference(rep, e, 1e-5);
    for (const auto& row : rep.rows)
      if (row.has_symbolic && row.exponent >= Rat(-1))
        CHECK(row.verdict == "ok");
  }
}

TEST_CASE("radius fit reproduces the symbolic finite part") {
  const ClassicalSymbol a = parse_symbol("1/|xi|^1", 1);
  const ScalarValue fitted = fit_radius_constant(a);
  const double want = finite_part(a).to_double();  // 1/(2pi)
  CHECK(want == doctest::Approx(0.15915494309189535).epsilon(1e-14));
  CHECK(fitted.to_double() == doctest::Approx(want).epsilon(1e-9));
}
