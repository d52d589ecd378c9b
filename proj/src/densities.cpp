#include "symtrace/densities.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace symtrace {

namespace {

DensityRow term_finite_part(const HomogeneousTerm& t, int n) {
  if (t.log_power != 0)
    fail(ErrorKind::Internal, "finite part needs a log-free symbol");
  ScalarValue s = term_sphere_moment(t);
  Rat d = t.degree;
  Rat dn = d + n;
  DensityRow row;
  row.degree = d;
  row.K = t.K;
  if (dn == 0) {
    if (t.K == 0)
      fail(ErrorKind::Internal, "degree -n term without near-origin taming");
    row.branch = FpBranch::BallLog;
    row.value = s.div_rat(Rat(t.K));
  } else {
    row.branch = dn > 0 ? FpBranch::BallDifference : FpBranch::Absolute;
    Rat radial = Rat(1) / (dn + t.K) - Rat(1) / dn;
    row.value = s.mul_rat(radial);
  }
  row.value = row.value * dbar_norm(n);
  return row;
}

std::vector<DensityRow> finite_part_rows(const ClassicalSymbol& a) {
  std::vector<DensityRow> rows;
  rows.reserve(a.terms().size());
  for (const auto& t : a.terms()) rows.push_back(term_finite_part(t, a.n()));
  return rows;
}

}  // namespace

const char* to_string(FpBranch b) {
  switch (b) {
    case FpBranch::BallDifference: return "ball_difference";
    case FpBranch::BallLog: return "ball_log";
    case FpBranch::Absolute: return "absolute";
  }
  return "?";
}

ScalarValue finite_part(const ClassicalSymbol& a) {
  ScalarValue total;
  for (const auto& row : finite_part_rows(a)) total += row.value;
  return total;
}

std::vector<RadiusRow> radius_expansion(const ClassicalSymbol& a) {
  const int n = a.n();
  ScalarValue norm = dbar_norm(n);
  std::map<std::pair<Rat, unsigned>, ScalarValue> acc;
  auto put = [&acc](const Rat& e, unsigned l, const ScalarValue& v) {
    auto key = std::make_pair(e, l);
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, v);
    else
      it->second += v;
  };
  put(0, 0, ScalarValue::zero());
  for (const auto& t : a.terms()) {
    if (t.log_power != 0)
      fail(ErrorKind::Internal, "radius expansion needs a log-free symbol");
    ScalarValue s = term_sphere_moment(t) * norm;
    Rat dn = t.degree + n;
    // inner piece: int_0^1 r^{d+K+n-1} dr
    put(0, 0, s.div_rat(dn + t.K));
    if (dn == 0) {
      // outer piece: int_1^R r^{-1} dr = log R
      put(0, 1, s);
    } else {
      // outer piece: int_1^R r^{d+n-1} dr = (R^{d+n} - 1)/(d+n)
      put(dn, 0, s.div_rat(dn));
      put(0, 0, -s.div_rat(dn));
    }
  }
  std::vector<RadiusRow> rows;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
    const auto& [key, v] = *it;
    if (v.is_zero() && !(key.first == 0 && key.second == 0)) continue;
    rows.push_back({key.first, key.second, v});
  }
  return rows;
}

ScalarValue finite_part_by_radius(const ClassicalSymbol& a, unsigned orders) {
  ScalarValue constant;
  for (const auto& r : radius_expansion(a)) {
    if (r.exponent < -Rat(orders)) break;  // depth cap; sits below the constant
    if (r.exponent == 0 && r.log_power == 0) constant = r.coeff;
  }
  return constant;
}

ScalarValue residue_density(const ClassicalSymbol& a) {
  const HomogeneousTerm* t = a.term_of_degree(Rat(-a.n()));
  if (!t) return ScalarValue::zero();
  return term_sphere_moment(*t) * dbar_norm(a.n());
}

ScalarValue residue0_log(const ClassicalSymbol& a, const LogPolyhomSymbol& logp) {
  if (a.n() != logp.n() || a.M() != logp.M())
    fail(ErrorKind::Domain, "symbol and log factor disagree in n or M");
  const Rat target = Rat(-a.n());
  if (logp.truncated()) {
    for (const auto& t : a.terms()) {
      Rat g = target - t.degree;  // log-factor degree the product needs
      Rat depth = logp.sigma() - g;
      if (g < logp.min_degree() && rat_is_integer(depth) && depth >= 0)
        fail(ErrorKind::Truncation,
             "log factor truncated at degree " + logp.min_degree().get_str() +
                 " but the degree-(-n) component needs degree " + g.get_str() +
                 "; raise the truncation order");
    }
  }
  LogPolyhomSymbol r = symbol_product(a, logp);
  ScalarValue s;
  for (const auto& part : r.component(target, 0))
    s += part.scale * sphere_moment(part.angular);
  return s * dbar_norm(a.n());
}

const char* to_string(ParityClass c) {
  switch (c) {
    case ParityClass::EvenEven: return "even-even";
    case ParityClass::EvenOdd: return "even-odd";
    case ParityClass::Neither: return "neither";
  }
  return "?";
}

ParityClass parity_class(const ClassicalSymbol& a) {
  if (a.empty()) return ParityClass::EvenEven;
  if (!rat_is_integer(a.sigma())) return ParityClass::Neither;
  bool all_ee = true, all_eo = true;
  for (const auto& t : a.terms()) {
    bool even_part_ok = true, odd_part_ok = true;
    for (const auto& part : t.parts) {
      even_part_ok = even_part_ok && part.angular.even_on_sphere();
      odd_part_ok = odd_part_ok && part.angular.odd_on_sphere();
    }
    long d = rat_to_long(t.degree);
    bool d_even = ((d % 2) + 2) % 2 == 0;
    all_ee = all_ee && (d_even ? even_part_ok : odd_part_ok);
    all_eo = all_eo && (d_even ? odd_part_ok : even_part_ok);
  }
  if (all_ee) return ParityClass::EvenEven;
  if (all_eo) return ParityClass::EvenOdd;
  return ParityClass::Neither;
}

DensityReport density_report(const ClassicalSymbol& a,
                             const LogPolyhomSymbol* logp) {
  DensityReport rep;
  rep.rows = finite_part_rows(a);
  for (const auto& row : rep.rows) rep.tr_x += row.value;
  rep.res_x = residue_density(a);
  if (logp) rep.res_x0_log = residue0_log(a, *logp);
  return rep;
}

}  // namespace symtrace
