#include "symtrace/polynomial.hpp"

#include <numeric>
#include <sstream>

namespace symtrace {

namespace {
unsigned total_degree(const RatPoly::Expo& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}
}  // namespace

RatPoly RatPoly::constant(int n, const Rat& c) {
  RatPoly p(n);
  p.add_term(Expo(n, 0), c);
  return p;
}

RatPoly RatPoly::variable(int n, int i) {
  if (i < 1 || i > n) fail(ErrorKind::Domain, "variable index out of range");
  Expo e(n, 0);
  e[i - 1] = 1;
  return monomial(n, e, Rat(1));
}

RatPoly RatPoly::monomial(int n, const Expo& e, const Rat& c) {
  if (static_cast<int>(e.size()) != n) fail(ErrorKind::Internal, "exponent arity mismatch");
  RatPoly p(n);
  p.add_term(e, c);
  return p;
}

void RatPoly::add_term(const Expo& e, const Rat& c) {
  if (c == 0) return;
  auto it = c_.find(e);
  if (it == c_.end()) {
    c_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) c_.erase(it);
  }
}

int RatPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : c_) d = std::max(d, static_cast<int>(total_degree(e)));
  return d;
}

bool RatPoly::is_homogeneous(int* deg) const {
  if (c_.empty()) {
    if (deg) *deg = 0;
    return true;
  }
  unsigned d = total_degree(c_.begin()->first);
  for (const auto& [e, c] : c_)
    if (total_degree(e) != d) return false;
  if (deg) *deg = static_cast<int>(d);
  return true;
}

bool RatPoly::is_constant(Rat* value) const {
  if (c_.empty()) {
    if (value) *value = 0;
    return true;
  }
  if (c_.size() == 1 && total_degree(c_.begin()->first) == 0) {
    if (value) *value = c_.begin()->second;
    return true;
  }
  return false;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  if (n_ != o.n_) fail(ErrorKind::Internal, "polynomial arity mismatch");
  RatPoly r(*this);
  for (const auto& [e, c] : o.c_) r.add_term(e, c);
  return r;
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
  RatPoly r(n_);
  for (const auto& [e, c] : c_) r.c_.emplace(e, -c);
  return r;
}

RatPoly RatPoly::scale(const Rat& s) const {
  RatPoly r(n_);
  if (s == 0) return r;
  for (const auto& [e, c] : c_) r.c_.emplace(e, c * s);
  return r;
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (n_ != o.n_) fail(ErrorKind::Internal, "polynomial arity mismatch");
  RatPoly r(n_);
  for (const auto& [ea, ca] : c_)
    for (const auto& [eb, cb] : o.c_) {
      Expo e(n_);
      for (int i = 0; i < n_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

RatPoly RatPoly::pow(unsigned k) const {
  RatPoly r = constant(n_, Rat(1));
  for (unsigned i = 0; i < k; ++i) r = r * (*this);
  return r;
}

RatPoly RatPoly::even_part() const {
  RatPoly r(n_);
  for (const auto& [e, c] : c_)
    if (total_degree(e) % 2 == 0) r.c_.emplace(e, c);
  return r;
}

RatPoly RatPoly::odd_part() const {
  RatPoly r(n_);
  for (const auto& [e, c] : c_)
    if (total_degree(e) % 2 == 1) r.c_.emplace(e, c);
  return r;
}

RatPoly RatPoly::sphere_canonical() const {
  // Rewrite xi_1^2 -> 1 - xi_2^2 - ... - xi_n^2 until xi_1 appears with
  // exponent <= 1. Terminates: each pass strictly lowers the xi_1 exponent
  // of the rewritten monomial.
  RatPoly cur(*this);
  for (;;) {
    const std::map<Expo, Rat>* terms = &cur.c_;
    auto it = terms->begin();
    for (; it != terms->end(); ++it)
      if (it->first[0] >= 2) break;
    if (it == terms->end()) return cur;

    Expo e = it->first;
    Rat c = it->second;
    RatPoly rest = cur;
    rest.c_.erase(e);

    Expo base = e;
    base[0] -= 2;
    RatPoly repl(n_);
    repl.add_term(base, c);
    for (int i = 1; i < n_; ++i) {
      Expo ei = base;
      ei[i] += 2;
      repl.add_term(ei, -c);
    }
    cur = rest + repl;
  }
}

RatPoly RatPoly::homogenized() const {
  if (c_.empty()) return *this;
  int target = degree();
  RatPoly r2(n_);  // |xi|^2 as a polynomial
  for (int i = 1; i <= n_; ++i) r2 = r2 + variable(n_, i) * variable(n_, i);
  RatPoly out(n_);
  for (const auto& [e, c] : c_) {
    int gap = target - static_cast<int>(total_degree(e));
    if (gap % 2 != 0)
      fail(ErrorKind::Domain, "cannot homogenize mixed-parity polynomial");
    RatPoly m = monomial(n_, e, c);
    out = out + m * r2.pow(static_cast<unsigned>(gap / 2));
  }
  return out;
}

Rat RatPoly::coeff_abs_sum() const {
  Rat s(0);
  for (const auto& [e, c] : c_) s += abs(c);
  return s;
}

std::string RatPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    Rat a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = (a == 1);
    bool has_var = total_degree(e) > 0;
    if (!unit || !has_var) os << rat_str(a);
    bool lead = !unit || !has_var;
    for (int i = 0; i < n_; ++i) {
      if (e[i] == 0) continue;
      if (lead) os << "*";
      os << "xi" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      lead = true;
    }
  }
  return os.str();
}

}  // namespace symtrace
