#ifndef SYMTRACE_RESOLVENT_HPP
#define SYMTRACE_RESOLVENT_HPP

#include <map>
#include <optional>
#include <vector>

#include "symtrace/expansion.hpp"
#include "symtrace/symbol.hpp"

namespace symtrace {

// One resolvent-type factor (c|xi|^m - lambda)^{-e}; m lives on the symbol.
struct ResolventFactor {
  Rat c;           // > 0
  unsigned e = 1;  // >= 1
};

// angular(omega) * |xi|^{d1} * prod_f (c_f|xi|^m - lambda)^{-e_f}.
// lambda counts with degree m: the joint degree is d1 - m * sum(e_f).
struct ParamProduct {
  std::vector<SymbolPart> parts;
  Rat d1 = 0;
  std::vector<ResolventFactor> factors;  // ascending c, equal c merged

  Rat joint_degree(const Rat& m) const;
  unsigned factor_order() const;  // sum of e_f
};

// Merge a factor into a canonical (sorted, distinct c) factor list.
void push_factor(std::vector<ResolventFactor>& fs, const Rat& c, unsigned e);

// Parameter-dependent symbol: joint-homogeneous components of degrees
// stepping down by integers, each a finite sum of resolvent-factor
// products. Components below min_degree are unknown, not zero.
class ParamSymbol {
 public:
  ParamSymbol() = default;
  ParamSymbol(int n, int M, const Rat& m, unsigned N)
      : n_(n), M_(M), m_(m), N_(N) {}

  int n() const { return n_; }
  int M() const { return M_; }
  const Rat& m() const { return m_; }
  unsigned power() const { return N_; }

  void add_product(const ParamProduct& q);
  void set_truncation(const Rat& min_degree);
  bool truncated() const { return truncated_; }
  const Rat& min_degree() const { return min_degree_; }

  // Joint degree -> products of that degree, highest degree first.
  const std::map<Rat, std::vector<ParamProduct>, std::greater<Rat>>& terms()
      const {
    return terms_;
  }

  ParamSymbol scaled(const Rat& c) const;
  ParamSymbol operator+(const ParamSymbol& o) const;

  // d/dlambda / (every factor obeys d/dlambda u^e = e u^{e+1}); power += 1.
  ParamSymbol lambda_derivative() const;

  // Strict-homogeneous value at xi = r*omega, lambda = -t with t > 0.
  long double eval_channel(int channel, long double r,
                           const std::vector<long double>& omega,
                           long double t) const;

 private:
  int n_ = 1;
  int M_ = 1;
  Rat m_ = 2;
  unsigned N_ = 1;
  std::map<Rat, std::vector<ParamProduct>, std::greater<Rat>> terms_;
  bool truncated_ = false;
  Rat min_degree_ = 0;
};

// (p - lambda)^{-N} as a geometric series in the lower-order part of p
// around (c|xi|^m - lambda)^{-1}, truncated after J geometric terms.
ParamSymbol resolvent_symbol(const ClassicalSymbol& p, unsigned N, unsigned J);

// (p - lambda)^{-N} - (p2 - lambda)^{-N} with the leading pieces paired via
// u - v = (c2 - c1)|xi|^m u v, so every product keeps factor order >= N+1.
ParamSymbol difference_resolvent(const ClassicalSymbol& p,
                                 const ClassicalSymbol& p2, unsigned N,
                                 unsigned J);

// a(xi) * r(xi, lambda), degreewise.
ParamSymbol symbol_times(const ClassicalSymbol& a, const ParamSymbol& r);

// Integral over R^n of the joint-degree-g component at lambda = -1, via the
// substitution v = r^m and exact partial fractions at the poles -1/c_f.
// Requires (d1+n)/m to be a positive integer for every product in the
// component; anything else signals an order-bookkeeping bug.
ScalarValue integrate_component(const ParamSymbol& s, const Rat& g);

// Trace expansion of a against the model resolvent (|xi|^m + 1 - lambda)^{-N}
// in t = -lambda with exponents >= floor (default -N-2). Requires even m
// with m > sigma + n; integer-exponent coefficients come out exact.
AsymptoticExpansion model_trace_expansion(const ClassicalSymbol& a, unsigned m,
                                          unsigned N,
                                          std::optional<Rat> floor = {});

// Constant coefficient at (-lambda)^{-N} of the difference trace
// a((p-lambda)^{-N} - (p2-lambda)^{-N}); N-independent, computed at N = 1
// and recomputed at the given N as a consistency assertion. Exactly zero
// when sigma + n is not a natural number.
ScalarValue difference_coefficient(const ClassicalSymbol& a,
                                   const ClassicalSymbol& p,
                                   const ClassicalSymbol& p2, unsigned N);

// -res(a((1/m)log p - (1/m2)log p2)): the change of the constant trace
// coefficient between two elliptic weights, orders may differ.
ScalarValue trace_defect(const ClassicalSymbol& a, const ClassicalSymbol& p,
                         const ClassicalSymbol& p2);

// Constant trace coefficient in closed form:
// finite_part(a) - (1/m) * residue0_log(a, series_log(p)).
ScalarValue c0(const ClassicalSymbol& a, const ClassicalSymbol& p);

}  // namespace symtrace

#endif
