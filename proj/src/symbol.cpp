#include "symtrace/symbol.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace symtrace {

bool HomogeneousTerm::is_zero() const {
  for (const auto& p : parts)
    if (!p.scale.is_zero() && !p.angular.is_zero()) return false;
  return true;
}

AngularPoly HomogeneousTerm::plain_angular() const {
  if (parts.size() != 1 || !parts[0].scale.exact_equal(ScalarValue::one()))
    fail(ErrorKind::Internal, "term carries non-rational scales");
  return parts[0].angular;
}

HomogeneousTerm HomogeneousTerm::scaled(const ScalarValue& c) const {
  HomogeneousTerm t;
  t.degree = degree;
  t.log_power = log_power;
  t.K = K;
  for (const auto& p : parts) add_part(t.parts, {p.scale * c, p.angular});
  return t;
}

unsigned default_extension_exponent(const Rat& degree, int n) {
  Rat need = Rat(1 - n) - degree;  // K >= need
  if (need <= 0) return 0;
  Rat k = -rat_floor(-need);  // ceil(need)
  long v = rat_to_long(k);
  if (v % 2 != 0) ++v;
  return static_cast<unsigned>(v);
}

ScalarValue term_sphere_moment(const HomogeneousTerm& t) {
  ScalarValue s;
  for (const auto& part : t.parts) s += part.scale * sphere_moment(part.angular);
  return s;
}

ScalarValue dbar_norm(int n) {
  Rat q = 1;
  for (int i = 0; i < n; ++i) q /= 2;
  return ScalarValue::exact(q, -n);
}

void add_part(std::vector<SymbolPart>& parts, const SymbolPart& p) {
  if (p.scale.is_zero() || p.angular.is_zero()) return;
  if (p.scale.is_exact() && p.scale.pi_power() == 0) {
    // Fold the rational into the polynomial so exact content stays merged.
    SymbolPart folded{ScalarValue::one(), p.angular.scale(p.scale.rational())};
    for (auto& q : parts)
      if (q.scale.exact_equal(ScalarValue::one())) {
        q.angular = q.angular + folded.angular;
        return;
      }
    parts.push_back(folded);
    return;
  }
  for (auto& q : parts)
    if (q.scale.exact_equal(p.scale)) {
      q.angular = q.angular + p.angular;
      return;
    }
  parts.push_back(p);
}

namespace {

void prune_parts(std::vector<SymbolPart>& parts) {
  parts.erase(std::remove_if(parts.begin(), parts.end(),
                             [](const SymbolPart& p) {
                               return p.scale.is_zero() || p.angular.is_zero();
                             }),
              parts.end());
}

long double eval_parts(const std::vector<SymbolPart>& parts, int channel,
                       const std::vector<long double>& omega) {
  long double s = 0;
  for (const auto& p : parts)
    s += static_cast<long double>(p.scale.to_double()) *
         p.angular.diag[channel].eval<long double>(omega);
  return s;
}

}  // namespace

void ClassicalSymbol::add_term(const Rat& degree, const AngularPoly& angular,
                               std::optional<unsigned> K) {
  if (angular.n != n_ || angular.M != M_)
    fail(ErrorKind::Domain, "angular part does not match symbol dimensions");
  HomogeneousTerm t;
  t.degree = degree;
  t.log_power = 0;
  t.K = K ? *K : default_extension_exponent(degree, n_);
  if (t.K % 2 != 0)
    fail(ErrorKind::Domain, "extension exponent must be even");
  if (degree + Rat(static_cast<long>(t.K)) + Rat(n_) < 1)
    fail(ErrorKind::Domain,
         "extension exponent too small for integrability near 0");
  add_part(t.parts, {ScalarValue::one(), angular});
  terms_.push_back(std::move(t));
}

void ClassicalSymbol::finalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const HomogeneousTerm& a, const HomogeneousTerm& b) {
              return a.degree > b.degree;
            });
  std::vector<HomogeneousTerm> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().degree == t.degree) {
      if (merged.back().K != t.K)
        fail(ErrorKind::Domain, "conflicting extension exponents at one degree");
      for (const auto& p : t.parts) add_part(merged.back().parts, p);
    } else {
      merged.push_back(std::move(t));
    }
  }
  for (auto& t : merged) prune_parts(t.parts);
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const HomogeneousTerm& t) { return t.is_zero(); }),
               merged.end());
  terms_ = std::move(merged);
  if (!terms_.empty()) {
    sigma_ = terms_.front().degree;
    for (const auto& t : terms_)
      if (!rat_is_integer(sigma_ - t.degree))
        fail(ErrorKind::Domain, "degrees must step down from the order by integers");
  } else {
    sigma_ = 0;
  }
}

const HomogeneousTerm* ClassicalSymbol::term_of_degree(const Rat& d) const {
  for (const auto& t : terms_)
    if (t.degree == d) return &t;
  return nullptr;
}

ClassicalSymbol ClassicalSymbol::with_extension_bump(unsigned delta) const {
  ClassicalSymbol s = *this;
  for (auto& t : s.terms_) t.K += delta;
  return s;
}

ClassicalSymbol ClassicalSymbol::scaled(const Rat& c) const {
  ClassicalSymbol s = *this;
  if (c == 0) {
    s.terms_.clear();
    s.sigma_ = 0;
    return s;
  }
  for (auto& t : s.terms_)
    for (auto& p : t.parts) p.angular = p.angular.scale(c);
  return s;
}

long double ClassicalSymbol::eval_channel(
    int channel, long double r, const std::vector<long double>& omega) const {
  long double total = 0;
  for (const auto& t : terms_) {
    long double expo = static_cast<long double>(t.degree.get_d());
    if (r <= 1) expo += t.K;
    long double radial;
    if (r == 0) {
      if (expo > 0) continue;
      // Exponent 0 at the origin: continuous only for angular-free terms.
      Rat cval;
      bool ok = true;
      long double v = 0;
      for (const auto& p : t.parts) {
        if (!p.angular.diag[channel].is_constant(&cval)) { ok = false; break; }
        v += static_cast<long double>(p.scale.to_double()) *
             static_cast<long double>(cval.get_d());
      }
      if (!ok)
        fail(ErrorKind::Domain,
             "symbol value at xi = 0 needs a constant angular part");
      total += v;
      continue;
    }
    radial = std::pow(r, expo);
    total += radial * eval_parts(t.parts, channel, omega);
  }
  return total;
}

long double ClassicalSymbol::eval_tr(const std::vector<long double>& xi) const {
  long double r2 = 0;
  for (long double x : xi) r2 += x * x;
  long double r = std::sqrt(r2);
  std::vector<long double> omega(xi.size(), 0);
  if (r > 0)
    for (size_t i = 0; i < xi.size(); ++i) omega[i] = xi[i] / r;
  long double s = 0;
  for (int ch = 0; ch < M_; ++ch) s += eval_channel(ch, r, omega);
  return s;
}

long double ClassicalSymbol::coeff_mass() const {
  long double m = 0;
  for (const auto& t : terms_)
    for (const auto& p : t.parts) {
      long double a = 0;
      for (const auto& q : p.angular.diag)
        a += static_cast<long double>(q.coeff_abs_sum().get_d());
      m += std::fabs(static_cast<long double>(p.scale.to_double())) * a;
    }
  return m;
}

void LogPolyhomSymbol::add_term(const HomogeneousTerm& t) {
  if (t.is_zero()) return;
  for (auto& u : terms_)
    if (u.degree == t.degree && u.log_power == t.log_power) {
      for (const auto& p : t.parts) add_part(u.parts, p);
      return;
    }
  terms_.push_back(t);
}

void LogPolyhomSymbol::set_truncation(const Rat& min_degree) {
  truncated_ = true;
  min_degree_ = min_degree;
}

void LogPolyhomSymbol::sort_terms() {
  for (auto& t : terms_) prune_parts(t.parts);
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const HomogeneousTerm& t) { return t.is_zero(); }),
               terms_.end());
  std::sort(terms_.begin(), terms_.end(),
            [](const HomogeneousTerm& a, const HomogeneousTerm& b) {
              if (a.degree != b.degree) return a.degree > b.degree;
              return a.log_power < b.log_power;
            });
}

Rat LogPolyhomSymbol::sigma() const {
  Rat top = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.degree > top) top = t.degree;
    first = false;
  }
  return top;
}

std::vector<SymbolPart> LogPolyhomSymbol::component(const Rat& degree,
                                                    unsigned log_power) const {
  for (const auto& t : terms_)
    if (t.degree == degree && t.log_power == log_power) return t.parts;
  return {};
}

LogPolyhomSymbol LogPolyhomSymbol::scaled(const Rat& c) const {
  LogPolyhomSymbol s = *this;
  if (c == 0) {
    s.terms_.clear();
    return s;
  }
  for (auto& t : s.terms_)
    for (auto& p : t.parts) p.angular = p.angular.scale(c);
  return s;
}

LogPolyhomSymbol LogPolyhomSymbol::operator+(const LogPolyhomSymbol& o) const {
  if (n_ != o.n_ || M_ != o.M_)
    fail(ErrorKind::Domain, "symbol dimension mismatch in +");
  LogPolyhomSymbol s = *this;
  for (const auto& t : o.terms_) s.add_term(t);
  if (o.truncated_) {
    if (!s.truncated_ || o.min_degree_ > s.min_degree_)
      s.set_truncation(o.min_degree_);
  }
  s.sort_terms();
  return s;
}

long double LogPolyhomSymbol::eval_channel(
    int channel, long double r, const std::vector<long double>& omega) const {
  long double total = 0;
  long double lg = std::log(r);
  for (const auto& t : terms_) {
    long double v = std::pow(r, static_cast<long double>(t.degree.get_d()));
    for (unsigned i = 0; i < t.log_power; ++i) v *= lg;
    total += v * eval_parts(t.parts, channel, omega);
  }
  return total;
}

Rat radial_leading_coefficient(const ClassicalSymbol& p) {
  if (p.empty()) fail(ErrorKind::Domain, "empty symbol has no leading part");
  const HomogeneousTerm& top = p.terms().front();
  Rat c;
  bool have = false;
  for (const auto& part : top.parts) {
    if (!part.scale.exact_equal(ScalarValue::one()))
      fail(ErrorKind::Domain, "leading part must have rational coefficients");
    for (const auto& q : part.angular.diag) {
      Rat ci;
      if (!q.sphere_canonical().is_constant(&ci))
        fail(ErrorKind::Domain, "leading part must be radial");
      if (have && ci != c)
        fail(ErrorKind::Domain, "leading part must be radial with one coefficient");
      c = ci;
      have = true;
    }
  }
  if (!have || c <= 0)
    fail(ErrorKind::Domain, "leading coefficient must be positive");
  return c;
}

LogPolyhomSymbol series_log(const ClassicalSymbol& p, unsigned J) {
  Rat c = radial_leading_coefficient(p);
  Rat m = p.sigma();
  if (m <= 0) fail(ErrorKind::Domain, "symbol order must be positive");
  const int n = p.n();
  const int M = p.M();

  // Lower-order quotient u, keyed by the integer drop below the top degree.
  std::map<long, AngularPoly> u;
  for (size_t i = 1; i < p.terms().size(); ++i) {
    const auto& t = p.terms()[i];
    long j = rat_to_long(m - t.degree);
    u.emplace(j, t.plain_angular().scale(1 / c));
  }

  LogPolyhomSymbol out(n, M);
  HomogeneousTerm order_term;
  order_term.degree = 0;
  order_term.log_power = 1;
  add_part(order_term.parts, {ScalarValue::one(), AngularPoly::constant(n, M, m)});
  out.add_term(order_term);

  ScalarValue logc = ScalarValue::log_of_rat(c);
  if (!logc.is_zero()) {
    HomogeneousTerm ct;
    ct.degree = 0;
    ct.log_power = 0;
    add_part(ct.parts, {logc, AngularPoly::constant(n, M, 1)});
    out.add_term(ct);
  }

  if (!u.empty()) {
    // log(1 + u) = sum_k (-1)^{k+1} u^k / k, collected by degree drop <= J.
    std::map<long, AngularPoly> acc;  // components of log(1+u)
    std::map<long, AngularPoly> upow = u;
    for (unsigned k = 1; !upow.empty(); ++k) {
      Rat w = Rat(k % 2 == 1 ? 1 : -1) / Rat(static_cast<long>(k));
      for (const auto& [j, ang] : upow) {
        auto it = acc.find(j);
        if (it == acc.end())
          acc.emplace(j, ang.scale(w));
        else
          it->second = it->second + ang.scale(w);
      }
      std::map<long, AngularPoly> next;
      for (const auto& [j1, a1] : upow)
        for (const auto& [j2, a2] : u) {
          if (j1 + j2 > static_cast<long>(J)) continue;
          AngularPoly prod = a1 * a2;
          auto it = next.find(j1 + j2);
          if (it == next.end())
            next.emplace(j1 + j2, std::move(prod));
          else
            it->second = it->second + prod;
        }
      upow = std::move(next);
    }
    for (const auto& [j, ang] : acc) {
      HomogeneousTerm t;
      t.degree = Rat(-j);
      t.log_power = 0;
      add_part(t.parts, {ScalarValue::one(), ang});
      out.add_term(t);
    }
    out.set_truncation(Rat(-static_cast<long>(J)));
  }
  out.sort_terms();
  return out;
}

LogPolyhomSymbol symbol_product(const ClassicalSymbol& a,
                                const LogPolyhomSymbol& r) {
  if (a.n() != r.n())
    fail(ErrorKind::Domain, "symbol dimension mismatch in product");
  if (a.M() != r.M() && a.M() != 1 && r.M() != 1)
    fail(ErrorKind::Domain, "matrix size mismatch in product");
  LogPolyhomSymbol out(a.n(), std::max(a.M(), r.M()));
  for (const auto& ta : a.terms())
    for (const auto& tr : r.terms()) {
      HomogeneousTerm t;
      t.degree = ta.degree + tr.degree;
      t.log_power = ta.log_power + tr.log_power;
      for (const auto& pa : ta.parts)
        for (const auto& pr : tr.parts)
          add_part(t.parts, {pa.scale * pr.scale, pa.angular * pr.angular});
      out.add_term(t);
    }
  if (r.truncated() && !a.empty())
    out.set_truncation(a.sigma() + r.min_degree());
  out.sort_terms();
  return out;
}

}  // namespace symtrace
