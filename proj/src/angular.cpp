#include "symtrace/angular.hpp"

#include <sstream>

#include "symtrace/common.hpp"

namespace symtrace {

AngularPoly AngularPoly::constant(int n, int M, const Rat& c) {
  AngularPoly a(n, M);
  for (auto& p : a.diag) p = RatPoly::constant(n, c);
  return a;
}

RatPoly AngularPoly::tr() const {
  RatPoly s(n);
  for (const auto& p : diag) s = s + p;
  return s;
}

bool AngularPoly::is_zero() const {
  for (const auto& p : diag)
    if (!p.is_zero()) return false;
  return true;
}

bool AngularPoly::is_zero_on_sphere() const {
  for (const auto& p : diag)
    if (!p.is_zero_on_sphere()) return false;
  return true;
}

AngularPoly AngularPoly::operator+(const AngularPoly& o) const {
  if (n != o.n || M != o.M) fail(ErrorKind::Internal, "angular shape mismatch in +");
  AngularPoly r(n, M);
  for (int i = 0; i < M; ++i) r.diag[i] = diag[i] + o.diag[i];
  return r;
}

AngularPoly AngularPoly::operator-() const {
  AngularPoly r(n, M);
  for (int i = 0; i < M; ++i) r.diag[i] = -diag[i];
  return r;
}

AngularPoly AngularPoly::scale(const Rat& c) const {
  AngularPoly r(n, M);
  for (int i = 0; i < M; ++i) r.diag[i] = diag[i].scale(c);
  return r;
}

AngularPoly AngularPoly::operator*(const AngularPoly& o) const {
  if (n != o.n) fail(ErrorKind::Internal, "angular dimension mismatch in *");
  if (M == o.M) {
    AngularPoly r(n, M);
    for (int i = 0; i < M; ++i) r.diag[i] = diag[i] * o.diag[i];
    return r;
  }
  if (M == 1) {
    AngularPoly r(n, o.M);
    for (int i = 0; i < o.M; ++i) r.diag[i] = diag[0] * o.diag[i];
    return r;
  }
  if (o.M == 1) {
    AngularPoly r(n, M);
    for (int i = 0; i < M; ++i) r.diag[i] = diag[i] * o.diag[0];
    return r;
  }
  fail(ErrorKind::Internal, "angular matrix size mismatch in *");
}

bool AngularPoly::even_on_sphere() const {
  for (const auto& p : diag)
    if (!p.odd_part().is_zero_on_sphere()) return false;
  return true;
}

bool AngularPoly::odd_on_sphere() const {
  for (const auto& p : diag)
    if (!p.even_part().is_zero_on_sphere()) return false;
  return true;
}

std::string AngularPoly::to_string() const {
  if (M == 1) return diag[0].to_string();
  std::ostringstream os;
  os << "diag(";
  for (int i = 0; i < M; ++i) {
    if (i) os << ", ";
    os << diag[i].to_string();
  }
  os << ")";
  return os.str();
}

namespace {

// Gamma(k + 1/2) = (2k)! / (4^k k!) * sqrt(pi): returns the rational factor.
Rat half_gamma_rat(unsigned k) {
  Rat r = factorial(2 * k) / factorial(k);
  Rat four_k = 1;
  for (unsigned i = 0; i < k; ++i) four_k *= 4;
  return r / four_k;
}

// Moment of a single even monomial xi^e over S^{n-1}:
//   2 * prod_i Gamma(b_i) / Gamma(sum_i b_i),  b_i = (e_i + 1) / 2.
// Each b_i is either an integer (e_i odd: excluded here) or a half-integer.
// With all e_i even, every b_i = e_i/2 + 1/2 contributes one sqrt(pi), so the
// product carries pi^{n/2}; the denominator Gamma(sum b_i) eats pi^{1/2} when
// n is odd. Net power of pi is floor(n/2) either way.
ScalarValue even_monomial_moment(const std::vector<unsigned>& e, int n) {
  Rat num = 2;
  long sqrt_pi_count = 0;  // in the numerator
  unsigned twice_sum = 0;  // 2 * sum b_i, an integer
  for (int i = 0; i < n; ++i) {
    unsigned ei = i < static_cast<int>(e.size()) ? e[i] : 0;
    num *= half_gamma_rat(ei / 2);
    sqrt_pi_count += 1;
    twice_sum += ei + 1;
  }
  Rat den;
  if (twice_sum % 2 == 0) {
    den = factorial(twice_sum / 2 - 1);
  } else {
    den = half_gamma_rat((twice_sum - 1) / 2);
    sqrt_pi_count -= 1;
  }
  if (sqrt_pi_count % 2 != 0)
    fail(ErrorKind::Internal, "sphere moment pi power not integral");
  return ScalarValue::exact(num / den, sqrt_pi_count / 2);
}

}  // namespace

ScalarValue sphere_moment(const RatPoly& p, int n) {
  if (n < 1) fail(ErrorKind::Domain, "sphere moment needs n >= 1");
  if (n == 1) {
    Rat at_plus = 0, at_minus = 0;
    for (const auto& [e, c] : p.terms()) {
      unsigned e1 = e.empty() ? 0 : e[0];
      at_plus += c;
      at_minus += (e1 % 2 == 0) ? c : -c;
    }
    return ScalarValue::exact(at_plus + at_minus);
  }
  ScalarValue total = ScalarValue::zero();
  for (const auto& [e, c] : p.terms()) {
    bool odd = false;
    for (unsigned ei : e)
      if (ei % 2 != 0) { odd = true; break; }
    if (odd) continue;
    total = total + even_monomial_moment(e, n).mul_rat(c);
  }
  return total;
}

ScalarValue sphere_moment(const AngularPoly& a) { return sphere_moment(a.tr(), a.n); }

}  // namespace symtrace
