#include "symtrace/resolvent.hpp"

#include <algorithm>
#include <cmath>

#include "symtrace/densities.hpp"

namespace symtrace {

namespace {

Rat rat_pow(const Rat& x, long e) {
  Rat out = 1;
  Rat base = e >= 0 ? x : Rat(1) / x;
  for (long i = 0; i < std::labs(e); ++i) out *= base;
  return out;
}

std::vector<SymbolPart> scaled_parts(const std::vector<SymbolPart>& parts,
                                     const ScalarValue& c) {
  std::vector<SymbolPart> out;
  for (const auto& p : parts) add_part(out, {p.scale * c, p.angular});
  return out;
}

std::vector<SymbolPart> cross_parts(const std::vector<SymbolPart>& x,
                                    const std::vector<SymbolPart>& y) {
  std::vector<SymbolPart> out;
  for (const auto& a : x)
    for (const auto& b : y)
      add_part(out, {a.scale * b.scale, a.angular * b.angular});
  return out;
}

std::vector<SymbolPart> unit_parts(int n, int M) {
  return {SymbolPart{ScalarValue::one(), AngularPoly::constant(n, M, 1)}};
}

}  // namespace

Rat ParamProduct::joint_degree(const Rat& m) const {
  return d1 - m * Rat(static_cast<long>(factor_order()));
}

unsigned ParamProduct::factor_order() const {
  unsigned e = 0;
  for (const auto& f : factors) e += f.e;
  return e;
}

void push_factor(std::vector<ResolventFactor>& fs, const Rat& c, unsigned e) {
  if (c <= 0) fail(ErrorKind::Domain, "resolvent factor needs c > 0");
  if (e == 0) return;
  for (auto& f : fs) {
    if (f.c == c) {
      f.e += e;
      return;
    }
  }
  fs.push_back({c, e});
  std::sort(fs.begin(), fs.end(),
            [](const ResolventFactor& x, const ResolventFactor& y) {
              return x.c < y.c;
            });
}

void ParamSymbol::add_product(const ParamProduct& q) {
  bool zero = q.parts.empty();
  if (zero) return;
  terms_[q.joint_degree(m_)].push_back(q);
}

void ParamSymbol::set_truncation(const Rat& min_degree) {
  truncated_ = true;
  min_degree_ = min_degree;
}

ParamSymbol ParamSymbol::scaled(const Rat& c) const {
  ParamSymbol out(n_, M_, m_, N_);
  out.truncated_ = truncated_;
  out.min_degree_ = min_degree_;
  ScalarValue cs = ScalarValue::exact(c);
  for (const auto& [g, products] : terms_) {
    for (const auto& q : products) {
      ParamProduct r = q;
      r.parts = scaled_parts(q.parts, cs);
      out.add_product(r);
    }
  }
  return out;
}

ParamSymbol ParamSymbol::operator+(const ParamSymbol& o) const {
  if (n_ != o.n_ || M_ != o.M_ || m_ != o.m_ || N_ != o.N_)
    fail(ErrorKind::Domain, "parameter symbols disagree in n, M, m, or N");
  ParamSymbol out = *this;
  for (const auto& [g, products] : o.terms_)
    for (const auto& q : products) out.add_product(q);
  if (o.truncated_) {
    out.truncated_ = true;
    out.min_degree_ =
        truncated_ ? std::max(min_degree_, o.min_degree_) : o.min_degree_;
  }
  return out;
}

ParamSymbol ParamSymbol::lambda_derivative() const {
  ParamSymbol out(n_, M_, m_, N_ + 1);
  out.truncated_ = truncated_;
  out.min_degree_ = min_degree_ - m_;
  for (const auto& [g, products] : terms_) {
    for (const auto& q : products) {
      for (size_t f = 0; f < q.factors.size(); ++f) {
        ParamProduct r = q;
        r.parts = scaled_parts(
            q.parts, ScalarValue::exact(Rat(static_cast<long>(q.factors[f].e))));
        r.factors[f].e += 1;
        out.add_product(r);
      }
    }
  }
  return out;
}

long double eval_product(const ParamProduct& q, int channel, const Rat& m,
                         long double r, const std::vector<long double>& omega,
                         long double t) {
  long double ang = 0;
  for (const auto& part : q.parts)
    ang += static_cast<long double>(part.scale.to_double()) *
           part.angular.diag[channel].eval(omega);
  long double val = ang * powl(r, static_cast<long double>(q.d1.get_d()));
  long double rm = powl(r, static_cast<long double>(m.get_d()));
  for (const auto& f : q.factors)
    val *= powl(static_cast<long double>(f.c.get_d()) * rm + t,
                -static_cast<long double>(f.e));
  return val;
}

long double ParamSymbol::eval_channel(int channel, long double r,
                                      const std::vector<long double>& omega,
                                      long double t) const {
  long double acc = 0;
  for (const auto& [g, products] : terms_)
    for (const auto& q : products)
      acc += eval_product(q, channel, m_, r, omega, t);
  return acc;
}

namespace {

// Geometric expansion of (p - lambda)^{-1} in the lower-order part of p,
// then (N-1) lambda-derivatives / (N-1)!. include_leading switches the pure
// (c|xi|^m - lambda)^{-N} head on or off.
ParamSymbol build_geometric(const ClassicalSymbol& p, unsigned N, unsigned J,
                            bool include_leading) {
  if (N < 1) fail(ErrorKind::Domain, "resolvent power must be >= 1");
  if (J < 1) fail(ErrorKind::Domain, "geometric truncation must keep a term");
  Rat c = radial_leading_coefficient(p);
  Rat m = p.sigma();
  const int n = p.n(), M = p.M();

  struct Lower {
    Rat d;
    std::vector<SymbolPart> parts;
  };
  std::vector<Lower> lows;
  for (const auto& t : p.terms())
    if (t.degree != m) lows.push_back({t.degree, t.parts});
  // divide the geometric variable by c: (p-lambda)^{-1} = u sum (-w u)^i
  // with u = (c|xi|^m - lambda)^{-1} and w = p - c|xi|^m kept as-is.

  ParamSymbol out(n, M, m, 1);
  // w^i as a degree -> parts map, starting from w^0 = 1
  std::map<Rat, std::vector<SymbolPart>> wpow{{Rat(0), unit_parts(n, M)}};
  for (unsigned i = 0; i < J; ++i) {
    if (include_leading || i >= 1) {
      Rat sign = i % 2 == 0 ? 1 : -1;
      for (const auto& [d1, parts] : wpow) {
        ParamProduct q;
        q.parts = scaled_parts(parts, ScalarValue::exact(sign));
        q.d1 = d1;
        push_factor(q.factors, c, i + 1);
        out.add_product(q);
      }
    }
    if (i + 1 < J && !lows.empty()) {
      std::map<Rat, std::vector<SymbolPart>> next;
      for (const auto& [d1, parts] : wpow) {
        for (const auto& low : lows) {
          auto cross = cross_parts(parts, low.parts);
          auto& slot = next[d1 + low.d];
          for (const auto& part : cross) add_part(slot, part);
        }
      }
      wpow = std::move(next);
    }
  }
  if (!lows.empty())
    out.set_truncation(-m - Rat(static_cast<long>(J)) + 1);

  for (unsigned step = 1; step < N; ++step) out = out.lambda_derivative();
  if (N > 1) out = out.scaled(Rat(1) / factorial(N - 1));
  return out;
}

}  // namespace

ParamSymbol resolvent_symbol(const ClassicalSymbol& p, unsigned N, unsigned J) {
  return build_geometric(p, N, J, true);
}

ParamSymbol difference_resolvent(const ClassicalSymbol& p,
                                 const ClassicalSymbol& p2, unsigned N,
                                 unsigned J) {
  if (p.sigma() != p2.sigma())
    fail(ErrorKind::Domain, "difference of resolvents needs equal orders");
  Rat c1 = radial_leading_coefficient(p);
  Rat c2 = radial_leading_coefficient(p2);
  Rat m = p.sigma();
  ParamSymbol out =
      build_geometric(p, N, J, false) + build_geometric(p2, N, J, false).scaled(-1);
  if (c1 != c2) {
    // u^N - v^N = (c2 - c1)|xi|^m sum_t u^{N-t} v^{t+1}
    for (unsigned t = 0; t < N; ++t) {
      ParamProduct q;
      q.parts = {SymbolPart{ScalarValue::exact(c2 - c1),
                            AngularPoly::constant(p.n(), p.M(), 1)}};
      q.d1 = m;
      push_factor(q.factors, c1, N - t);
      push_factor(q.factors, c2, t + 1);
      out.add_product(q);
    }
  }
  return out;
}

ParamSymbol symbol_times(const ClassicalSymbol& a, const ParamSymbol& r) {
  if (a.n() != r.n() || a.M() != r.M())
    fail(ErrorKind::Domain, "symbol and parameter symbol disagree in n or M");
  ParamSymbol out(r.n(), r.M(), r.m(), r.power());
  for (const auto& t : a.terms()) {
    for (const auto& [g, products] : r.terms()) {
      for (const auto& q : products) {
        ParamProduct s = q;
        s.parts = cross_parts(t.parts, q.parts);
        s.d1 = q.d1 + t.degree;
        out.add_product(s);
      }
    }
  }
  if (r.truncated()) out.set_truncation(a.sigma() + r.min_degree());
  return out;
}

namespace {

// int_0^infty v^{E-1} prod_i (c_i v + 1)^{-e_i} dv by partial fractions at
// the poles -1/c_i; E >= 1 integer, sum e_i >= E+1. Simple-pole residues
// cancel in total and pair into logs of the c-ratios.
ScalarValue pf_integral(long E, const std::vector<ResolventFactor>& fs) {
  unsigned total = 0;
  for (const auto& f : fs) total += f.e;
  if (E < 1 || total < static_cast<unsigned>(E) + 1)
    fail(ErrorKind::Internal, "partial-fraction integrand out of range");
  Rat C = 1;
  for (const auto& f : fs) C *= rat_pow(f.c, -static_cast<long>(f.e));

  Rat value = 0;
  std::vector<Rat> simple(fs.size(), Rat(0));
  for (size_t i = 0; i < fs.size(); ++i) {
    const unsigned e = fs[i].e;
    const Rat rho = Rat(-1) / fs[i].c;
    // Taylor coefficients of C v^{E-1} prod_{j != i} (v - rho_j)^{-e_j}
    // around rho, orders 0 .. e-1.
    std::vector<Rat> series(e, Rat(0));
    for (long tt = 0; tt < static_cast<long>(e) && tt <= E - 1; ++tt)
      series[tt] = binomial(Rat(E - 1), static_cast<unsigned>(tt)) *
                   rat_pow(rho, E - 1 - tt) * C;
    for (size_t j = 0; j < fs.size(); ++j) {
      if (j == i) continue;
      const Rat delta = rho - Rat(-1) / fs[j].c;
      std::vector<Rat> fac(e, Rat(0));
      for (unsigned tt = 0; tt < e; ++tt)
        fac[tt] = binomial(Rat(-static_cast<long>(fs[j].e)), tt) *
                  rat_pow(delta, -static_cast<long>(fs[j].e) - tt);
      std::vector<Rat> next(e, Rat(0));
      for (unsigned x = 0; x < e; ++x)
        for (unsigned y = 0; x + y < e; ++y) next[x + y] += series[x] * fac[y];
      series = std::move(next);
    }
    for (unsigned k = 1; k <= e; ++k) {
      const Rat& B = series[e - k];
      if (k == 1)
        simple[i] = B;
      else
        value += B * rat_pow(-rho, 1 - static_cast<long>(k)) / Rat(k - 1);
    }
  }
  Rat residue_sum = 0;
  for (const Rat& b : simple) residue_sum += b;
  if (residue_sum != 0)
    fail(ErrorKind::Internal, "simple poles fail to balance");
  ScalarValue out = ScalarValue::exact(value);
  if (fs.size() >= 2) {
    const Rat& c_last = fs.back().c;
    for (size_t i = 0; i + 1 < fs.size(); ++i)
      if (simple[i] != 0)
        out += ScalarValue::log_of_rat(fs[i].c / c_last).mul_rat(simple[i]);
  }
  return out;
}

}  // namespace

ScalarValue integrate_component(const ParamSymbol& s, const Rat& g) {
  auto it = s.terms().find(g);
  if (it == s.terms().end()) {
    if (s.truncated() && g < s.min_degree())
      fail(ErrorKind::Truncation,
           "component of degree " + g.get_str() +
               " lies below the truncation at " + s.min_degree().get_str());
    return ScalarValue::zero();
  }
  const int n = s.n();
  ScalarValue total;
  for (const ParamProduct& q : it->second) {
    Rat E_rat = (q.d1 + n) / s.m();
    if (!rat_is_integer(E_rat) || E_rat < 1 ||
        E_rat > Rat(static_cast<long>(q.factor_order())) - 1)
      fail(ErrorKind::Domain,
           "component integral is not in the absolutely convergent range; "
           "the symbol's order bookkeeping is off");
    ScalarValue ang;
    for (const auto& part : q.parts)
      ang += part.scale * sphere_moment(part.angular);
    ScalarValue radial =
        pf_integral(rat_to_long(E_rat), q.factors).div_rat(s.m());
    total += ang * radial;
  }
  return total * dbar_norm(n);
}

namespace {

// (pi/m) / sin(pi q) for non-integer rational q; exact whenever the sine is
// +-1 or +-1/2.
ScalarValue mi_value(const Rat& q, unsigned m) {
  Rat r = q - 2 * rat_floor(q / 2);  // in [0, 2)
  if (r == Rat(1, 2)) return ScalarValue::exact(Rat(1, m), 1);
  if (r == Rat(3, 2)) return ScalarValue::exact(Rat(-1, m), 1);
  if (r == Rat(1, 6) || r == Rat(5, 6))
    return ScalarValue::exact(Rat(2, m), 1);
  if (r == Rat(7, 6) || r == Rat(11, 6))
    return ScalarValue::exact(Rat(-2, m), 1);
  BigFloat pi = BigFloat::pi();
  BigFloat s = sin(pi * BigFloat(r));
  BigFloat v = pi / (BigFloat(static_cast<long>(m)) * s);
  return ScalarValue::numeric(v, v.ulp() * BigFloat(16L));
}

}  // namespace

AsymptoticExpansion model_trace_expansion(const ClassicalSymbol& a, unsigned m,
                                          unsigned N, std::optional<Rat> floor) {
  const int n = a.n();
  if (N < 1) fail(ErrorKind::Domain, "resolvent power must be >= 1");
  if (m < 2 || m % 2 != 0)
    fail(ErrorKind::Domain, "model weight order must be a positive even number");
  if (!a.empty() && Rat(static_cast<long>(m)) <= a.sigma() + n)
    fail(ErrorKind::Domain,
         "model weight order must exceed the symbol order plus the dimension");
  const Rat f = floor.value_or(Rat(-static_cast<long>(N) - 2));
  const Rat f1 = f + static_cast<long>(N - 1);  // floor before differentiation

  AsymptoticExpansion acc(1, f1);
  const Rat mr(static_cast<long>(m));
  for (const auto& term : a.terms()) {
    const ScalarValue S = term_sphere_moment(term) * dbar_norm(n);
    const Rat s = term.degree + n;
    if (s == 0) {
      // outer radial integral carries z^{-1} log z; inner supplies 1/K
      for (long j = 0; Rat(-1 - j) >= f1; ++j) {
        Rat sign = j % 2 == 0 ? 1 : -1;
        acc.add(Rat(-1 - j), 1, S.mul_rat(sign / mr),
                static_cast<unsigned>(ExpBranch::Log));
        if (j >= 1)
          acc.add(Rat(-1 - j), 0,
                  S.mul_rat(-sign * harmonic(static_cast<unsigned>(j)) / mr),
                  static_cast<unsigned>(ExpBranch::Log));
      }
      for (long k = 0; Rat(-1 - k) >= f1; ++k) {
        Rat w = k == 0 ? Rat(1, term.K)
                       : Rat(1) / (term.K + mr * k) - Rat(1) / (mr * k);
        Rat sign = k % 2 == 0 ? 1 : -1;
        for (long i = 0; Rat(-1 - k - i) >= f1; ++i)
          acc.add(Rat(-1 - k - i), 0,
                  S.mul_rat(sign * w * binomial(Rat(-1 - k), i)),
                  static_cast<unsigned>(ExpBranch::Finite));
      }
    } else {
      const Rat q = s / mr;
      if (!rat_is_integer(q)) {
        const Rat beta = q - 1;
        const ScalarValue mi = S * mi_value(q, m);
        for (long i = 0; beta - i >= f1; ++i)
          acc.add(beta - i, 0, mi.mul_rat(binomial(beta, i)),
                  static_cast<unsigned>(ExpBranch::Master));
      }
      for (long k = 0; Rat(-1 - k) >= f1; ++k) {
        if (s + mr * k == 0)
          fail(ErrorKind::Domain,
               "radial master integral has a pole at a reported exponent; "
               "raise the floor or change the weight order");
        Rat w = Rat(1) / (s + term.K + mr * k) - Rat(1) / (s + mr * k);
        Rat sign = k % 2 == 0 ? 1 : -1;
        for (long i = 0; Rat(-1 - k - i) >= f1; ++i)
          acc.add(Rat(-1 - k - i), 0,
                  S.mul_rat(sign * w * binomial(Rat(-1 - k), i)),
                  static_cast<unsigned>(ExpBranch::Finite));
      }
    }
  }
  for (unsigned step = 1; step < N; ++step) acc = lambda_derivative(acc);
  if (N > 1) acc = acc.scaled(Rat(1) / factorial(N - 1));
  return acc;
}

ScalarValue difference_coefficient(const ClassicalSymbol& a,
                                   const ClassicalSymbol& p,
                                   const ClassicalSymbol& p2, unsigned N) {
  if (N < 1) fail(ErrorKind::Domain, "resolvent power must be >= 1");
  if (p.sigma() != p2.sigma())
    fail(ErrorKind::Domain, "difference coefficient needs equal weight orders");
  if (a.empty()) return ScalarValue::zero();
  const int n = a.n();
  const Rat m = p.sigma();
  const Rat reach = a.sigma() + n;
  if (!rat_is_integer(reach) || reach < 0) return ScalarValue::zero();
  const unsigned J = static_cast<unsigned>(rat_to_long(reach)) + 1;

  ParamSymbol s1 = symbol_times(a, difference_resolvent(p, p2, 1, J));
  ScalarValue v1 = integrate_component(s1, -m - n);
  if (N > 1) {
    ParamSymbol sN = symbol_times(a, difference_resolvent(p, p2, N, J));
    ScalarValue vN =
        integrate_component(sN, -m * static_cast<long>(N) - n);
    bool same = (v1.is_exact() && vN.is_exact()) ? v1.exact_equal(vN)
                                                 : v1.approx_equal(vN, 1e-12);
    if (!same)
      fail(ErrorKind::Internal,
           "derivative relation broke the N-independence of the coefficient");
  }
  return v1;
}

namespace {

unsigned log_reach(const ClassicalSymbol& a) {
  long J = 0;
  for (const auto& t : a.terms()) {
    Rat dn = t.degree + a.n();
    if (rat_is_integer(dn) && dn >= 0) J = std::max(J, rat_to_long(dn));
  }
  return static_cast<unsigned>(J);
}

}  // namespace

ScalarValue trace_defect(const ClassicalSymbol& a, const ClassicalSymbol& p,
                         const ClassicalSymbol& p2) {
  const unsigned J = log_reach(a);
  LogPolyhomSymbol L = series_log(p, J).scaled(Rat(1) / p.sigma()) +
                       series_log(p2, J).scaled(Rat(-1) / p2.sigma());
  return -residue0_log(a, L);
}

ScalarValue c0(const ClassicalSymbol& a, const ClassicalSymbol& p) {
  ScalarValue res0 = residue0_log(a, series_log(p, log_reach(a)));
  Rat m = p.sigma();
  return finite_part(a) - res0.div_rat(m);
}

}  // namespace symtrace
