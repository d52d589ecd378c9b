#include "symtrace/scalar.hpp"

#include <sstream>

namespace symtrace {

Rat parse_rat(const std::string& s) {
  if (s.empty()) fail(ErrorKind::Parse, "empty rational");
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::Parse, "bad rational literal: " + s);
  }
}

Rat binomial(const Rat& beta, unsigned k) {
  Rat r(1);
  for (unsigned j = 0; j < k; ++j) {
    r *= (beta - Rat(static_cast<long>(j)));
    r /= Rat(static_cast<long>(j) + 1);
  }
  return r;
}

Rat harmonic(unsigned k) {
  Rat h(0);
  for (unsigned j = 1; j <= k; ++j) h += Rat(1, static_cast<long>(j));
  return h;
}

Rat factorial(unsigned k) {
  Rat r(1);
  for (unsigned j = 2; j <= k; ++j) r *= Rat(static_cast<long>(j));
  return r;
}

ScalarValue::ScalarValue() : exact_(true), q_(0), pi_pow_(0), num_(), err_() {}

ScalarValue ScalarValue::exact(Rat q, int pi_pow) {
  ScalarValue s;
  s.exact_ = true;
  s.q_ = std::move(q);
  s.pi_pow_ = (s.q_ == 0) ? 0 : pi_pow;
  return s;
}

ScalarValue ScalarValue::from_long(long v) { return exact(Rat(v)); }

ScalarValue ScalarValue::numeric(const BigFloat& value, const BigFloat& err) {
  ScalarValue s;
  s.exact_ = false;
  s.num_ = value;
  s.err_ = abs(err) + value.ulp();
  return s;
}

ScalarValue ScalarValue::log_of_rat(const Rat& q) {
  if (q <= 0) fail(ErrorKind::Domain, "log of non-positive rational");
  if (q == 1) return zero();
  BigFloat v = log(BigFloat(q));
  return numeric(v, v.ulp() * BigFloat(4L));
}

bool ScalarValue::is_zero() const { return exact_ && q_ == 0; }

const Rat& ScalarValue::rational() const {
  if (!exact_) fail(ErrorKind::Internal, "rational() on numeric scalar");
  return q_;
}

int ScalarValue::pi_power() const {
  if (!exact_) fail(ErrorKind::Internal, "pi_power() on numeric scalar");
  return pi_pow_;
}

BigFloat ScalarValue::value() const {
  if (!exact_) return num_;
  BigFloat v(q_);
  if (pi_pow_ != 0) v = v * pow(BigFloat::pi(), BigFloat(static_cast<long>(pi_pow_)));
  return v;
}

BigFloat ScalarValue::error_bound() const {
  if (exact_) return BigFloat(0L);
  return err_;
}

ScalarValue ScalarValue::demoted() const {
  if (!exact_) return *this;
  BigFloat v = value();
  return numeric(v, v.ulp() * BigFloat(4L));
}

ScalarValue ScalarValue::operator+(const ScalarValue& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (exact_ && o.exact_ && pi_pow_ == o.pi_pow_) return exact(q_ + o.q_, pi_pow_);
  ScalarValue a = demoted(), b = o.demoted();
  ScalarValue r;
  r.exact_ = false;
  r.num_ = a.num_ + b.num_;
  r.err_ = a.err_ + b.err_ + r.num_.ulp();
  return r;
}

ScalarValue ScalarValue::operator-(const ScalarValue& o) const { return *this + (-o); }

ScalarValue ScalarValue::operator-() const {
  if (exact_) return exact(-q_, pi_pow_);
  ScalarValue r(*this);
  r.num_ = -r.num_;
  return r;
}

ScalarValue& ScalarValue::operator+=(const ScalarValue& o) {
  *this = *this + o;
  return *this;
}

ScalarValue ScalarValue::operator*(const ScalarValue& o) const {
  if (is_zero() || o.is_zero()) return zero();
  if (exact_ && o.exact_) return exact(q_ * o.q_, pi_pow_ + o.pi_pow_);
  ScalarValue a = demoted(), b = o.demoted();
  ScalarValue r;
  r.exact_ = false;
  r.num_ = a.num_ * b.num_;
  r.err_ = abs(a.num_) * b.err_ + abs(b.num_) * a.err_ + a.err_ * b.err_ + r.num_.ulp();
  return r;
}

ScalarValue ScalarValue::mul_rat(const Rat& q) const {
  return *this * exact(q);
}

ScalarValue ScalarValue::div_rat(const Rat& q) const {
  if (q == 0) fail(ErrorKind::Domain, "division by zero rational");
  return *this * exact(Rat(1) / q);
}

ScalarValue ScalarValue::div(const ScalarValue& o) const {
  if (o.is_zero()) fail(ErrorKind::Domain, "scalar division by zero");
  if (exact_ && o.exact_) return exact(q_ / o.q_, pi_pow_ - o.pi_pow_);
  ScalarValue a = demoted(), b = o.demoted();
  BigFloat babs = abs(b.num_);
  if (!(babs > b.err_)) fail(ErrorKind::Domain, "divisor indistinguishable from zero");
  ScalarValue r;
  r.exact_ = false;
  r.num_ = a.num_ / b.num_;
  // |a/b - a'/b'| <= (|a|eb + |b|ea) / (|b|(|b|-eb))
  r.err_ = (abs(a.num_) * b.err_ + babs * a.err_) / (babs * (babs - b.err_)) + r.num_.ulp();
  return r;
}

bool ScalarValue::exact_equal(const ScalarValue& o) const {
  if (!exact_ || !o.exact_) return false;
  return q_ == o.q_ && pi_pow_ == o.pi_pow_;
}

bool ScalarValue::approx_equal(const ScalarValue& o, double tol) const {
  if (exact_ && o.exact_ && exact_equal(o)) return true;
  BigFloat d = abs(value() - o.value());
  return d <= BigFloat(tol) + error_bound() + o.error_bound();
}

double ScalarValue::to_double() const { return value().to_double(); }

std::string ScalarValue::to_string() const {
  if (!exact_) return num_.to_string();
  if (pi_pow_ == 0) return rat_str(q_);
  std::ostringstream os;
  os << rat_str(q_);
  os << "*pi";
  if (pi_pow_ != 1) os << "^" << pi_pow_;
  return os.str();
}

}  // namespace symtrace
