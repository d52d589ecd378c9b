#ifndef SYMTRACE_SCALAR_HPP
#define SYMTRACE_SCALAR_HPP

#include <string>

#include "symtrace/common.hpp"
#include "symtrace/numeric.hpp"

namespace symtrace {

// Closed scalar domain for density and coefficient values.
//
// Exact values are q * pi^k with q rational and k a (possibly negative)
// integer. Sums demote to numeric only when the pi powers of two nonzero
// exact values disagree. Numeric values carry an absolute error bound that
// propagates sub-additively through ring operations.
class ScalarValue {
public:
  ScalarValue();  // exact zero

  static ScalarValue exact(Rat q, int pi_pow = 0);
  static ScalarValue from_long(long v);
  static ScalarValue numeric(const BigFloat& value, const BigFloat& err);
  static ScalarValue log_of_rat(const Rat& q);  // q > 0, numeric (exact 0 for q == 1)
  static ScalarValue zero() { return ScalarValue(); }
  static ScalarValue one() { return exact(Rat(1)); }

  bool is_exact() const { return exact_; }
  bool is_zero() const;            // exact zero only; numeric values are never "zero"
  const Rat& rational() const;     // pre: exact
  int pi_power() const;            // pre: exact
  BigFloat value() const;          // numeric view (demotes exact on the fly)
  BigFloat error_bound() const;    // 0 for exact

  ScalarValue operator+(const ScalarValue& o) const;
  ScalarValue operator-(const ScalarValue& o) const;
  ScalarValue operator*(const ScalarValue& o) const;
  ScalarValue operator-() const;
  ScalarValue& operator+=(const ScalarValue& o);

  ScalarValue mul_rat(const Rat& q) const;
  ScalarValue div_rat(const Rat& q) const;  // q != 0
  ScalarValue div(const ScalarValue& o) const;

  // Structural equality of exact values (q and pi power both equal).
  bool exact_equal(const ScalarValue& o) const;
  // |a-b| <= tol, evaluating numerically.
  bool approx_equal(const ScalarValue& o, double tol) const;

  double to_double() const;
  std::string to_string() const;

private:
  bool exact_;
  Rat q_;
  int pi_pow_;
  BigFloat num_;
  BigFloat err_;

  ScalarValue demoted() const;
};

}  // namespace symtrace

#endif
