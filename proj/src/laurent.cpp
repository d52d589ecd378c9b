#include "symtrace/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <vector>

namespace symtrace {

namespace {

constexpr unsigned kDefaultOrder = 6;

ScalarValue gamma_constant() {
  BigFloat g = BigFloat::euler_gamma();
  return ScalarValue::numeric(g, g.ulp() * BigFloat(4L));
}

Rat binom_rat(unsigned n, unsigned k) {
  if (k > n) return Rat(0);
  return factorial(n) / (factorial(k) * factorial(n - k));
}

// Bernoulli numbers, exact, via the defining recurrence.
Rat bernoulli(unsigned n) {
  static std::vector<Rat> cache{Rat(1)};
  while (cache.size() <= n) {
    unsigned t = cache.size();
    Rat s(0);
    for (unsigned j = 0; j < t; ++j) s += binom_rat(t + 1, j) * cache[j];
    cache.push_back(-s / Rat(t + 1));
  }
  return cache[n];
}

// zeta(k) for k >= 2: exact rational * pi^k at even k, numeric at odd k.
ScalarValue zeta_value(unsigned k) {
  if (k % 2 == 0) {
    Rat q = bernoulli(k) / (factorial(k) * Rat(2));
    for (unsigned i = 0; i < k; ++i) q *= 2;
    if ((k / 2) % 2 == 0) q = -q;
    return ScalarValue::exact(q, static_cast<int>(k));
  }
  BigFloat z = BigFloat::zeta_ui(k);
  return ScalarValue::numeric(z, z.ulp() * BigFloat(4L));
}

Rat harmonic_pow(unsigned m, unsigned r) {
  Rat s(0);
  for (unsigned j = 1; j <= m; ++j) {
    Rat p(1);
    for (unsigned i = 0; i < r; ++i) p /= Rat(j);
    s += p;
  }
  return s;
}

// exp of a series with zero constant term: E_t = (1/t) sum j L_j E_{t-j}.
std::vector<ScalarValue> exp_series(const std::vector<ScalarValue>& log_coeffs,
                                    unsigned orders) {
  std::vector<ScalarValue> e(orders + 1, ScalarValue::zero());
  e[0] = ScalarValue::one();
  for (unsigned t = 1; t <= orders; ++t) {
    ScalarValue s = ScalarValue::zero();
    for (unsigned j = 1; j <= t && j < log_coeffs.size(); ++j)
      s = s + log_coeffs[j].mul_rat(Rat(j)) * e[t - j];
    e[t] = s.div_rat(Rat(t));
  }
  return e;
}

// Product of (1 - u/rho)^{-1} over the given nonzero roots, exact, as
// coefficients 0..orders.
std::vector<Rat> inv_linear_block(const std::vector<Rat>& roots,
                                  unsigned orders) {
  std::vector<Rat> c(orders + 1, Rat(0));
  c[0] = 1;
  for (const Rat& rho : roots) {
    Rat inv = Rat(1) / rho;
    for (unsigned t = orders; t >= 1; --t) {
      Rat s(0), p(1);
      for (unsigned i = 1; i <= t; ++i) {
        p *= inv;
        s += p * c[t - i];
      }
      c[t] += s;
      if (t == 1) break;
    }
  }
  return c;
}

void require_order(unsigned T) {
  if (T < 1) fail(ErrorKind::Domain, "truncation order must be at least 1");
}

// Taylor data at u = 0 of the function prod_{j=1..M} (1 - (s0+u)/j)^{-1},
// allowing the factor with j = s0 (if any) to contribute its simple pole.
LaurentSeries rational_g_at(unsigned M, long s0, unsigned T) {
  Rat front(1);
  std::vector<Rat> roots;
  long pole_scale = 0;
  for (unsigned j = 1; j <= M; ++j) {
    long r = static_cast<long>(j) - s0;
    if (r == 0) {
      pole_scale = static_cast<long>(j);
      continue;
    }
    front *= Rat(j) / Rat(r);
    roots.push_back(Rat(r));
  }
  std::vector<Rat> block = inv_linear_block(roots, T);
  long lo = pole_scale != 0 ? -1 : 0;
  LaurentSeries out(Rat(0), lo, static_cast<long>(T) + lo);
  for (unsigned t = 0; t <= T; ++t) {
    Rat c = front * block[t];
    if (pole_scale != 0) c *= Rat(-pole_scale);
    long k = static_cast<long>(t) + lo;
    if (k <= out.hi() && c != 0) out.set(k, ScalarValue::exact(c));
  }
  return out;
}

bool scalar_matches(const ScalarValue& got, const ScalarValue& want) {
  if (got.is_exact() && want.is_exact()) return got.exact_equal(want);
  return got.approx_equal(want, 1e-12);
}

}  // namespace

LaurentSeries::LaurentSeries(const Rat& point, long lo, long hi)
    : point_(point), lo_(lo), hi_(hi) {
  if (hi_ < lo_) fail(ErrorKind::Domain, "empty Laurent window");
}

void LaurentSeries::set(long k, const ScalarValue& v) {
  if (k < lo_ || k > hi_)
    fail(ErrorKind::Domain, "coefficient outside the Laurent window");
  c_[k] = v;
}

void LaurentSeries::add(long k, const ScalarValue& v) {
  if (k < lo_ || k > hi_)
    fail(ErrorKind::Domain, "coefficient outside the Laurent window");
  auto it = c_.find(k);
  if (it == c_.end())
    c_[k] = v;
  else
    it->second = it->second + v;
}

ScalarValue LaurentSeries::coeff(long k) const {
  if (k < lo_) return ScalarValue::zero();
  if (k > hi_)
    fail(ErrorKind::Domain, "coefficient beyond the trusted truncation order");
  auto it = c_.find(k);
  return it == c_.end() ? ScalarValue::zero() : it->second;
}

LaurentSeries series_mul(const LaurentSeries& f, const LaurentSeries& g) {
  if (f.point() != g.point())
    fail(ErrorKind::Domain, "series expanded at different points");
  long lo = f.lo() + g.lo();
  long hi = std::min(f.hi() + g.lo(), g.hi() + f.lo());
  LaurentSeries out(f.point(), lo, hi);
  for (const auto& [i, a] : f.coeffs()) {
    if (a.is_zero()) continue;
    for (const auto& [j, b] : g.coeffs()) {
      long k = i + j;
      if (k > hi) break;
      if (!b.is_zero()) out.add(k, a * b);
    }
  }
  return out;
}

LaurentSeries series_add(const LaurentSeries& f, const LaurentSeries& g) {
  if (f.point() != g.point())
    fail(ErrorKind::Domain, "series expanded at different points");
  long lo = std::min(f.lo(), g.lo());
  long hi = std::min(f.hi(), g.hi());
  LaurentSeries out(f.point(), lo, hi);
  for (const auto& [i, a] : f.coeffs())
    if (i <= hi) out.add(i, a);
  for (const auto& [j, b] : g.coeffs())
    if (j <= hi) out.add(j, b);
  return out;
}

LaurentSeries series_scale(const LaurentSeries& f, const ScalarValue& c) {
  LaurentSeries out(f.point(), f.lo(), f.hi());
  if (c.is_zero()) return out;
  for (const auto& [i, a] : f.coeffs()) out.set(i, a * c);
  return out;
}

LaurentSeries known_series(SeriesKind kind, unsigned M, unsigned T) {
  require_order(T);
  switch (kind) {
    case SeriesKind::Gamma: {
      std::vector<ScalarValue> l(T + 2, ScalarValue::zero());
      l[1] = -gamma_constant();
      for (unsigned i = 2; i <= T + 1; ++i) {
        ScalarValue z = zeta_value(i).div_rat(Rat(i));
        l[i] = (i % 2 == 0) ? z : -z;
      }
      std::vector<ScalarValue> e = exp_series(l, T + 1);
      LaurentSeries out(Rat(0), -1, static_cast<long>(T));
      for (unsigned t = 0; t <= T + 1; ++t)
        out.set(static_cast<long>(t) - 1, e[t]);
      return out;
    }
    case SeriesKind::InvGammaShift: {
      std::vector<ScalarValue> l(T + 1, ScalarValue::zero());
      l[1] = ScalarValue::exact(harmonic(M)) - gamma_constant();
      for (unsigned i = 2; i <= T; ++i)
        l[i] = (ScalarValue::exact(harmonic_pow(M, i)) - zeta_value(i))
                   .div_rat(Rat(i));
      std::vector<ScalarValue> e = exp_series(l, T);
      LaurentSeries out(Rat(0), 0, static_cast<long>(T));
      for (unsigned t = 0; t <= T; ++t) out.set(t, e[t]);
      return out;
    }
    case SeriesKind::GM: {
      LaurentSeries base = rational_g_at(M, 0, T);
      return M % 2 == 0 ? base : series_scale(base, -ScalarValue::one());
    }
    case SeriesKind::SinFactor: {
      LaurentSeries out(Rat(0), 1, static_cast<long>(T));
      for (unsigned i = 0; 2 * i + 1 <= T; ++i) {
        Rat q = Rat(1) / factorial(2 * i + 1);
        if ((i + M) % 2 == 1) q = -q;
        out.set(2 * i + 1, ScalarValue::exact(q, static_cast<int>(2 * i)));
      }
      return out;
    }
  }
  fail(ErrorKind::Internal, "unhandled series kind");
}

LaurentSeries known_series(const std::string& name, unsigned T) {
  auto arg = [&](const std::string& head) -> unsigned {
    std::string rest = name.substr(head.size());
    if (rest.size() < 3 || rest.front() != '(' || rest.back() != ')')
      fail(ErrorKind::Domain, "unknown series name: " + name);
    for (size_t i = 1; i + 1 < rest.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(rest[i])))
        fail(ErrorKind::Domain, "unknown series name: " + name);
    return static_cast<unsigned>(
        std::strtoul(rest.substr(1, rest.size() - 2).c_str(), nullptr, 10));
  };
  if (name == "gamma") return known_series(SeriesKind::Gamma, 0, T);
  if (name.rfind("inv_gamma_shift", 0) == 0)
    return known_series(SeriesKind::InvGammaShift, arg("inv_gamma_shift"), T);
  if (name.rfind("g_M", 0) == 0)
    return known_series(SeriesKind::GM, arg("g_M"), T);
  if (name.rfind("sin_factor", 0) == 0)
    return known_series(SeriesKind::SinFactor, arg("sin_factor"), T);
  fail(ErrorKind::Domain, "unknown series name: " + name);
}

LaurentSeries reciprocal_gamma_series(unsigned T) {
  require_order(T);
  std::vector<ScalarValue> l(T + 1, ScalarValue::zero());
  l[1] = gamma_constant();
  for (unsigned i = 2; i <= T; ++i) {
    ScalarValue z = zeta_value(i).div_rat(Rat(i));
    l[i] = (i % 2 == 0) ? -z : z;
  }
  std::vector<ScalarValue> e = exp_series(l, T);
  LaurentSeries out(Rat(0), 1, static_cast<long>(T) + 1);
  for (unsigned t = 0; t <= T; ++t) out.set(static_cast<long>(t) + 1, e[t]);
  return out;
}

namespace {

// Pole bookkeeping shared by the transition entry points. a and b are the
// log and power coefficients of the resolvent trace at one exponent.
struct PolePair {
  ScalarValue a = ScalarValue::zero();
  ScalarValue b = ScalarValue::zero();
};

// (1/pi) sin(pi q), exact at the multiples of 1/2 and 1/6, numeric otherwise.
ScalarValue sin_factor_value(const Rat& q) {
  Rat r = q - Rat(2) * rat_floor(q / Rat(2));
  auto table = [&](const Rat& at, const Rat& val) {
    return r == at ? std::optional<Rat>(val) : std::nullopt;
  };
  for (auto& [at, val] :
       std::initializer_list<std::pair<Rat, Rat>>{{Rat(1, 2), Rat(1)},
                                                  {Rat(3, 2), Rat(-1)},
                                                  {Rat(1, 6), Rat(1, 2)},
                                                  {Rat(5, 6), Rat(1, 2)},
                                                  {Rat(7, 6), Rat(-1, 2)},
                                                  {Rat(11, 6), Rat(-1, 2)}}) {
    if (auto hit = table(at, val)) return ScalarValue::exact(*hit, -1);
  }
  BigFloat x = BigFloat::pi() * BigFloat(r);
  BigFloat s = sin(x) / BigFloat::pi();
  return ScalarValue::numeric(s, s.ulp() * BigFloat(16L));
}

ZetaPole transition_at_integer(long s0, const PolePair& p, unsigned M,
                               unsigned T) {
  long k = -s0;
  ZetaPole out;
  out.location = Rat(s0);

  LaurentSeries d(Rat(0), -2, -1);
  d.set(-2, p.a);
  d.set(-1, p.b);

  // Gamma(N) * zeta = D * W with W(s0+u) = M! / Gamma(M+1+k-u).
  Rat w0 = factorial(M) / factorial(static_cast<unsigned>(M + k));
  LaurentSeries w = series_scale(
      known_series(SeriesKind::InvGammaShift, static_cast<unsigned>(M + k), T),
      ScalarValue::exact(w0));
  LaurentSeries q = series_mul(d, w);
  out.gz_order2 = q.coeff(-2);
  out.gz_order1 = q.coeff(-1);

  // zeta = D * G with G = sin factor * rational factor; the sin zero at s0
  // is what shields the regular value from the unknown analytic remainder.
  LaurentSeries g = series_mul(
      rational_g_at(M, s0, T),
      known_series(SeriesKind::SinFactor, static_cast<unsigned>(std::labs(s0)),
                   T));
  LaurentSeries z = series_mul(d, g);
  out.z_residue = z.coeff(-1);
  out.has_regular = z.hi() >= 0;
  if (out.has_regular) out.z_regular = z.coeff(0);
  return out;
}

ZetaPole transition_at_fractional(const Rat& s0, const PolePair& p, unsigned M) {
  if (!p.a.is_zero())
    fail(ErrorKind::Internal, "log coefficient at a fractional pole");
  ZetaPole out;
  out.location = s0;
  out.gz_order2 = ScalarValue::zero();

  // W(s0) = M!/Gamma(M+1-s0); the argument is positive for decaying traces.
  BigFloat garg = gamma(BigFloat(Rat(M + 1) - s0));
  BigFloat wv = BigFloat(factorial(M)) / garg;
  out.gz_order1 = p.b * ScalarValue::numeric(wv, wv.ulp() * BigFloat(16L));

  Rat front(1);
  for (unsigned j = 1; j <= M; ++j) front *= Rat(j) / (Rat(j) - s0);
  out.z_residue = p.b * sin_factor_value(s0).mul_rat(front);
  out.has_regular = false;
  return out;
}

}  // namespace

std::pair<ScalarValue, ScalarValue> resolvent_to_zeta_at_zero(
    const ScalarValue& log_coeff, const ScalarValue& const_coeff, unsigned N) {
  if (N < 1) fail(ErrorKind::Domain, "resolvent power must be at least 1");
  unsigned M = N - 1;
  unsigned T = kDefaultOrder;

  LaurentSeries d(Rat(0), -2, -1);
  d.set(-2, log_coeff);
  d.set(-1, const_coeff);
  LaurentSeries g = series_mul(known_series(SeriesKind::GM, M, T),
                               known_series(SeriesKind::SinFactor, M, T));
  LaurentSeries z = series_mul(d, g);
  ScalarValue c_res = z.coeff(-1);
  ScalarValue c_reg = z.coeff(0);

  ScalarValue want_reg = const_coeff + log_coeff.mul_rat(harmonic(M));
  if (!scalar_matches(c_res, log_coeff) || !scalar_matches(c_reg, want_reg))
    fail(ErrorKind::Internal,
         "series transition at zero disagrees with the closed form");
  return {c_res, c_reg};
}

ZetaPoleData resolvent_to_zeta_full(const AsymptoticExpansion& e,
                                    const Rat& sigma, const Rat& m, int n) {
  if (m <= 0) fail(ErrorKind::Domain, "weight order must be positive");
  unsigned N = e.power();
  unsigned M = N - 1;
  long minus_n = -static_cast<long>(N);
  if (e.floor() > Rat(minus_n))
    fail(ErrorKind::Domain, "expansion floor hides the pole at zero");

  std::map<Rat, PolePair, RatLess> pole_map;
  pole_map[Rat(0)] = PolePair{};
  for (const auto& [key, row] : e.rows()) {
    const Rat& x = key.first;
    unsigned l = key.second;
    if (row.value.is_zero()) continue;
    if (x >= 0)
      fail(ErrorKind::Grid, "trace expansion exponent does not decay");
    bool log_slot = rat_is_integer(x) && x <= Rat(minus_n);
    Rat j = sigma + Rat(n) - m * (x + Rat(static_cast<long>(N)));
    bool power_slot = rat_is_integer(j) && j >= 0;
    if (l >= 1 && !log_slot)
      fail(ErrorKind::Grid, "log coefficient off the integer exponent grid");
    if (!log_slot && !power_slot)
      fail(ErrorKind::Grid,
           "exponent fits neither the log ladder nor the symbol grid");
    PolePair& p = pole_map[x + Rat(static_cast<long>(N))];
    if (l >= 1)
      p.a = p.a + row.value;
    else
      p.b = p.b + row.value;
  }

  ZetaPoleData out;
  out.N = N;
  unsigned T = kDefaultOrder;
  for (const auto& [s0, pair] : pole_map) {
    ZetaPole pole = rat_is_integer(s0)
                        ? transition_at_integer(rat_to_long(s0), pair, M, T)
                        : transition_at_fractional(s0, pair, M);
    out.poles.push_back(std::move(pole));
  }
  std::reverse(out.poles.begin(), out.poles.end());

  for (const ZetaPole& p : out.poles) {
    if (p.location != 0) continue;
    const PolePair& pair = pole_map[Rat(0)];
    ScalarValue want = pair.b + pair.a.mul_rat(harmonic(M));
    if (!scalar_matches(p.z_residue, pair.a) ||
        !scalar_matches(p.z_regular, want))
      fail(ErrorKind::Internal,
           "series transition at zero disagrees with the closed form");
  }
  return out;
}

ScalarValue zeta_regular_value(const ZetaPoleData& z) {
  for (const ZetaPole& p : z.poles) {
    if (p.location != 0) continue;
    if (!p.has_regular)
      fail(ErrorKind::Internal, "missing regular value at zero");
    return p.z_regular;
  }
  fail(ErrorKind::Domain, "pole data carries no entry at zero");
}

}  // namespace symtrace
