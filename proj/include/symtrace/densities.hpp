#ifndef SYMTRACE_DENSITIES_HPP
#define SYMTRACE_DENSITIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "symtrace/symbol.hpp"

namespace symtrace {

// Radial branch that produced one term's finite-part value.
enum class FpBranch {
  BallDifference,  // d > -n: integral of (realized - strict) over |xi| <= 1
  BallLog,         // d = -n: integral of the realized term over |xi| <= 1
  Absolute,        // d < -n: absolutely convergent integral over R^n
};

const char* to_string(FpBranch b);

struct DensityRow {
  Rat degree;
  FpBranch branch;
  ScalarValue value;
  unsigned K = 0;
};

struct DensityReport {
  ScalarValue tr_x;
  ScalarValue res_x;
  std::optional<ScalarValue> res_x0_log;
  std::vector<DensityRow> rows;  // tr_x is exactly the sum of row values
};

// Finite part of int_{R^n} a(xi) dxi / (2pi)^n, termwise in closed form.
ScalarValue finite_part(const ClassicalSymbol& a);

// One row of the large-R expansion of the ball integral: coeff * R^e * log^l R.
struct RadiusRow {
  Rat exponent;
  unsigned log_power = 0;  // 0 or 1; log rows sit at exponent 0
  ScalarValue coeff;
};

// Exact large-R expansion of int_{|xi|<=R} a dxi/(2pi)^n, highest power
// first, constant row last. The expansion is finite: one power per distinct
// degree, at most one log row, one constant row.
std::vector<RadiusRow> radius_expansion(const ClassicalSymbol& a);

// Constant term of radius_expansion; rows below R^{-orders} are skipped,
// which never touches the constant. Agrees with finite_part(a) exactly.
ScalarValue finite_part_by_radius(const ClassicalSymbol& a, unsigned orders);

// (2pi)^{-n} integral over S^{n-1} of tr a_{-n}; zero without such a term.
ScalarValue residue_density(const ClassicalSymbol& a);

// Same functional on the log-free degree-(-n) component of a * logp.
// Errors when logp's truncation stops above a degree the product needs.
ScalarValue residue0_log(const ClassicalSymbol& a, const LogPolyhomSymbol& logp);

enum class ParityClass { EvenEven, EvenOdd, Neither };
const char* to_string(ParityClass c);

// Exact componentwise parity: a_d(-xi) = (-1)^d a_d(xi) for every term is
// even-even, (-1)^{d-1} for every term is even-odd; needs integer order.
ParityClass parity_class(const ClassicalSymbol& a);

DensityReport density_report(const ClassicalSymbol& a,
                             const LogPolyhomSymbol* logp = nullptr);

}  // namespace symtrace

#endif
