#ifndef SYMTRACE_NUMERIC_HPP
#define SYMTRACE_NUMERIC_HPP

#include <mpfr.h>

#include <string>

#include "symtrace/common.hpp"

namespace symtrace {

// Working precision of the numeric fallback, in significant decimal digits.
// Read once per BigFloat construction; settable from the CLI / env.
int default_precision_digits();
void set_default_precision_digits(int digits);

// Thin RAII wrapper over mpfr_t. All operations round to nearest at the
// precision of the widest operand.
class BigFloat {
public:
  BigFloat();
  BigFloat(long v);
  BigFloat(double v);
  explicit BigFloat(const Rat& q);
  explicit BigFloat(const std::string& decimal);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat pi();
  static BigFloat euler_gamma();
  static BigFloat zeta_ui(unsigned long k);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  friend BigFloat abs(const BigFloat& a);
  friend BigFloat log(const BigFloat& a);
  friend BigFloat exp(const BigFloat& a);
  friend BigFloat sin(const BigFloat& a);
  friend BigFloat cos(const BigFloat& a);
  friend BigFloat sqrt(const BigFloat& a);
  friend BigFloat pow(const BigFloat& a, const BigFloat& b);
  friend BigFloat gamma(const BigFloat& a);

  int cmp(const BigFloat& o) const;
  bool operator<(const BigFloat& o) const { return cmp(o) < 0; }
  bool operator>(const BigFloat& o) const { return cmp(o) > 0; }
  bool operator<=(const BigFloat& o) const { return cmp(o) <= 0; }
  bool operator>=(const BigFloat& o) const { return cmp(o) >= 0; }
  bool is_zero() const;
  int sign() const;

  // Magnitude of one unit in the last place; used as rounding slop.
  BigFloat ulp() const;

  double to_double() const;
  std::string to_string(int digits = 0) const;  // 0: full working precision

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

private:
  mpfr_t v_;
};

}  // namespace symtrace

#endif
