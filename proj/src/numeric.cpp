#include "symtrace/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace symtrace {

namespace {
int g_digits = 50;
mpfr_prec_t bits_for(int digits) {
  // 3.33 bits per digit plus guard bits.
  return static_cast<mpfr_prec_t>(digits * 10 / 3 + 24);
}
}  // namespace

int default_precision_digits() { return g_digits; }

void set_default_precision_digits(int digits) {
  if (digits < 10 || digits > 10000)
    fail(ErrorKind::Domain, "precision digits out of range [10,10000]");
  g_digits = digits;
}

BigFloat::BigFloat() { mpfr_init2(v_, bits_for(g_digits)); mpfr_set_zero(v_, 1); }

BigFloat::BigFloat(long v) {
  mpfr_init2(v_, bits_for(g_digits));
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(double v) {
  mpfr_init2(v_, bits_for(g_digits));
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rat& q) {
  mpfr_init2(v_, bits_for(g_digits));
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const std::string& decimal) {
  mpfr_init2(v_, bits_for(g_digits));
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
    fail(ErrorKind::Parse, "bad decimal literal: " + decimal);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::pi() {
  BigFloat r;
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::euler_gamma() {
  BigFloat r;
  mpfr_const_euler(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::zeta_ui(unsigned long k) {
  BigFloat r;
  mpfr_zeta_ui(r.v_, k, MPFR_RNDN);
  return r;
}

namespace {
mpfr_prec_t join_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(mpfr_get_prec(a.raw()), mpfr_get_prec(b.raw()));
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_set_prec(r.raw(), join_prec(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_set_prec(r.raw(), join_prec(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_set_prec(r.raw(), join_prec(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  if (mpfr_zero_p(b.raw())) fail(ErrorKind::Domain, "division by zero");
  BigFloat r;
  mpfr_set_prec(r.raw(), join_prec(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(*this);
  mpfr_neg(r.v_, r.v_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& a) {
  BigFloat r(a);
  mpfr_abs(r.raw(), r.raw(), MPFR_RNDN);
  return r;
}

#define ST_UNARY(name, fn)                      \
  BigFloat name(const BigFloat& a) {            \
    BigFloat r(a);                              \
    fn(r.raw(), a.raw(), MPFR_RNDN);            \
    return r;                                   \
  }

ST_UNARY(log, mpfr_log)
ST_UNARY(exp, mpfr_exp)
ST_UNARY(sin, mpfr_sin)
ST_UNARY(cos, mpfr_cos)
ST_UNARY(sqrt, mpfr_sqrt)
ST_UNARY(gamma, mpfr_gamma)
#undef ST_UNARY

BigFloat pow(const BigFloat& a, const BigFloat& b) {
  BigFloat r;
  mpfr_set_prec(r.raw(), join_prec(a, b));
  mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

int BigFloat::cmp(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }

bool BigFloat::is_zero() const { return mpfr_zero_p(v_) != 0; }

int BigFloat::sign() const { return mpfr_sgn(v_); }

BigFloat BigFloat::ulp() const {
  BigFloat r;
  if (mpfr_zero_p(v_)) {
    // Smallest scale we ever care about.
    mpfr_set_ui_2exp(r.v_, 1, -4 * bits_for(g_digits), MPFR_RNDN);
    return r;
  }
  mpfr_exp_t e = mpfr_get_exp(v_);
  mpfr_set_ui_2exp(r.v_, 1, e - mpfr_get_prec(v_) + 1, MPFR_RNDN);
  return r;
}

double BigFloat::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string BigFloat::to_string(int digits) const {
  if (digits <= 0) digits = g_digits;
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Rg", digits, v_) < 0)
    fail(ErrorKind::Internal, "mpfr_asprintf failed");
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

}  // namespace symtrace
