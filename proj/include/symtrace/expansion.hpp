#ifndef SYMTRACE_EXPANSION_HPP
#define SYMTRACE_EXPANSION_HPP

#include <map>
#include <string>
#include <utility>

#include "symtrace/scalar.hpp"

namespace symtrace {

// Where a coefficient of the trace expansion came from.
enum class ExpBranch : unsigned {
  Master = 1,    // fractional ladder from the radial master integral
  Log = 2,       // log(-lambda) ladder of a degree-(-n) term
  Finite = 4,    // integer ladder carrying the finite-part data
};

std::string branch_names(unsigned mask);

// Asymptotic expansion of a resolvent trace in t = -lambda as t -> infinity:
// sum of coeff * t^exponent * log(t)^log_power rows. Rows below the floor
// are discarded on insertion; missing rows read back as exact zero.
class AsymptoticExpansion {
 public:
  struct Row {
    ScalarValue value;
    unsigned branches = 0;  // ExpBranch mask
  };
  using Key = std::pair<Rat, unsigned>;  // (exponent, log_power)

  AsymptoticExpansion() = default;
  AsymptoticExpansion(unsigned N, const Rat& floor) : N_(N), floor_(floor) {}

  unsigned power() const { return N_; }
  const Rat& floor() const { return floor_; }

  // Log rows may only sit at integer exponents <= -N.
  void add(const Rat& exponent, unsigned log_power, const ScalarValue& v,
           unsigned branches);

  ScalarValue coeff(const Rat& exponent, unsigned log_power) const;
  const std::map<Key, Row>& rows() const { return rows_; }

  AsymptoticExpansion scaled(const Rat& c) const;

 private:
  unsigned N_ = 1;
  Rat floor_ = -3;
  std::map<Key, Row> rows_;
};

// Termwise d/dlambda: t^b log^l t picks up -(b t^{b-1} log^l t +
// l t^{b-1} log^{l-1} t) under lambda = -t. Power N and floor drop by one
// step (the result expands A(P-lambda)^{-N-1} scaled by N).
AsymptoticExpansion lambda_derivative(const AsymptoticExpansion& e);

// Coefficients at exponent -N: (log-power 1, log-power 0).
std::pair<ScalarValue, ScalarValue> coefficient_of_inverse_lambda(
    const AsymptoticExpansion& e);

}  // namespace symtrace

#endif
