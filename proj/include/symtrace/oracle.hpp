#ifndef SYMTRACE_ORACLE_HPP
#define SYMTRACE_ORACLE_HPP

#include <complex>
#include <string>
#include <vector>

#include "symtrace/expansion.hpp"
#include "symtrace/scalar.hpp"
#include "symtrace/symbol.hpp"

namespace symtrace {

// Brute-force numeric side: direct quadrature of trace integrals and
// least-squares extraction of expansion coefficients, kept independent of
// the symbolic machinery it cross-checks.

// Geometric magnitude ladder t0 * rho^i along the ray lambda = -t e^{i theta}.
// S == 0 means "ladder size + 4". Re-expansions downstream assume t0 >= 2.
struct RaySampler {
  double theta = 0.0;
  long double t0 = 16.0L;
  long double rho = 4.0L;
  unsigned S = 0;
  long double tol = 1e-12L;  // absolute quadrature budget per sample
};

struct TraceSample {
  long double t;
  std::complex<long double> value;
};

struct LadderSlot {
  Rat exponent;
  unsigned log_power = 0;
};

struct FitRow {
  Rat exponent;
  unsigned log_power = 0;
  double fitted = 0.0;
  bool has_symbolic = false;
  double symbolic = 0.0;
  double rel_error = 0.0;
  std::string verdict = "unchecked";
};

struct FitReport {
  std::vector<FitRow> rows;
  double residual = 0.0;
  double condition = 0.0;
  bool ok = false;  // false once the condition estimate passes the threshold
};

// tr a(xi) (p(xi)-lambda)^{-N} integrated over R^n against dxi/(2pi)^n,
// lambda = -t e^{i theta}. Radial p reduces the angular integral to exact
// sphere moments; otherwise the sphere is quadratured (n <= 3).
std::complex<long double> numeric_trace_ray(const ClassicalSymbol& a,
                                            const ClassicalSymbol& p,
                                            unsigned N, long double t,
                                            double theta,
                                            long double tol = 1e-12L);

// Real-axis wrapper, lambda < 0.
ScalarValue numeric_trace(const ClassicalSymbol& a, const ClassicalSymbol& p,
                          unsigned N, double lambda);

// Torus cross-oracle: sum of tr a(k) (p(k)-lambda)^{-N} over the integer
// lattice, truncated once a rigorous integral-comparison tail bound drops
// below tol (absolute), and scaled by (2pi)^{-n} so the value is directly
// comparable to numeric_trace (same dxi/(2pi)^n convention). lambda < 0.
ScalarValue lattice_trace(const ClassicalSymbol& a, const ClassicalSymbol& p,
                          unsigned N, double lambda, double tol);

// Trace samples along the sampler's ladder; ladder_size sets the default S.
std::vector<TraceSample> sample_ray(const ClassicalSymbol& a,
                                    const ClassicalSymbol& p, unsigned N,
                                    const RaySampler& sampler,
                                    unsigned ladder_size);

// Weighted least squares of samples against (-lambda)^alpha log(-lambda)^l;
// deterministic, with condition and residual diagnostics.
FitReport fit_expansion(const std::vector<TraceSample>& samples, double theta,
                        const std::vector<LadderSlot>& ladder);

// Ladder of the nonzero rows of a symbolic expansion, descending.
std::vector<LadderSlot> fit_ladder(const AsymptoticExpansion& e);

// Fill the symbolic columns of a fitted report from an expansion and mark
// each row's verdict at the given relative tolerance.
void attach_reference(FitReport& report, const AsymptoticExpansion& e,
                      double rel_tol);

// Constant term of the R-ladder fit of the numeric integral of a over
// |xi| <= R; cross-validates the symbolic finite part.
ScalarValue fit_radius_constant(const ClassicalSymbol& a);

}  // namespace symtrace

#endif
