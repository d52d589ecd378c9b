#ifndef SYMTRACE_SYMBOL_HPP
#define SYMTRACE_SYMBOL_HPP

#include <optional>
#include <vector>

#include "symtrace/angular.hpp"
#include "symtrace/common.hpp"
#include "symtrace/scalar.hpp"

namespace symtrace {

// One summand of a homogeneous component: scale * angular(xi/|xi|).
// Multiple parts let non-rational scales (log 4, pi-powers) coexist with
// rational polynomial data without losing exactness.
struct SymbolPart {
  ScalarValue scale;
  AngularPoly angular;
};

// Homogeneous component of degree d with an optional (log|xi|)^l factor.
// Strict version: |xi|^d * sum_parts scale*angular(xi/|xi|) * log^l|xi|.
// Realized version: multiplied by |xi|^K on |xi| <= 1 so that the radial
// integral near 0 converges (d + K + n >= 1); K even keeps parity intact.
struct HomogeneousTerm {
  Rat degree;
  unsigned log_power = 0;
  unsigned K = 0;
  std::vector<SymbolPart> parts;

  bool is_zero() const;
  // Requires exactly rational content (single scale-1 part after folding).
  AngularPoly plain_angular() const;
  HomogeneousTerm scaled(const ScalarValue& c) const;
};

// Smallest even K with d + K + n >= 1.
unsigned default_extension_exponent(const Rat& degree, int n);

// Integral over S^{n-1} of the fiber trace of one term's angular data.
ScalarValue term_sphere_moment(const HomogeneousTerm& t);

// (2pi)^{-n}, the measure normalization shared by all density integrals.
ScalarValue dbar_norm(int n);

// Merge a part into a part list: rational scales fold into the polynomial,
// structurally equal scales merge, anything else is appended.
void add_part(std::vector<SymbolPart>& parts, const SymbolPart& p);

class ClassicalSymbol {
 public:
  ClassicalSymbol() = default;
  ClassicalSymbol(int n, int M) : n_(n), M_(M) {}

  // Validates degree gaps, parity of K, integrability, shared n and M.
  void add_term(const Rat& degree, const AngularPoly& angular,
                std::optional<unsigned> K = std::nullopt);
  void finalize();  // sorts, merges equal degrees, drops zeros, sets sigma

  int n() const { return n_; }
  int M() const { return M_; }
  const Rat& sigma() const { return sigma_; }
  bool empty() const { return terms_.empty(); }
  const std::vector<HomogeneousTerm>& terms() const { return terms_; }
  std::vector<HomogeneousTerm>& mutable_terms() { return terms_; }

  const HomogeneousTerm* term_of_degree(const Rat& d) const;
  ClassicalSymbol with_extension_bump(unsigned delta) const;  // K -> K+delta
  ClassicalSymbol scaled(const Rat& c) const;

  // Realized pointwise evaluation of the fiber-trace at xi (|xi| split at 1).
  long double eval_tr(const std::vector<long double>& xi) const;
  long double eval_channel(int channel, long double r,
                           const std::vector<long double>& omega) const;

  // Largest absolute coefficient mass, for crude sup bounds: sum over terms
  // of |scale| * (sum |coeffs| of angular trace).
  long double coeff_mass() const;

 private:
  int n_ = 1;
  int M_ = 1;
  Rat sigma_ = 0;
  std::vector<HomogeneousTerm> terms_;  // strictly decreasing degree, l = 0
};

// Terms carry log-powers; the expansion may be truncated from below.
// Components with degree < min_degree are unknown rather than zero.
class LogPolyhomSymbol {
 public:
  LogPolyhomSymbol() = default;
  LogPolyhomSymbol(int n, int M) : n_(n), M_(M) {}

  void add_term(const HomogeneousTerm& t);  // merges equal (degree, l)
  void set_truncation(const Rat& min_degree);
  void sort_terms();

  int n() const { return n_; }
  int M() const { return M_; }
  Rat sigma() const;  // top degree, 0 when empty
  bool truncated() const { return truncated_; }
  const Rat& min_degree() const { return min_degree_; }
  const std::vector<HomogeneousTerm>& terms() const { return terms_; }

  // Merged parts at (degree, log_power); empty parts when absent.
  std::vector<SymbolPart> component(const Rat& degree, unsigned log_power) const;

  LogPolyhomSymbol scaled(const Rat& c) const;
  LogPolyhomSymbol operator+(const LogPolyhomSymbol& o) const;

  // Strict-homogeneous pointwise value, meaningful for r >= 1.
  long double eval_channel(int channel, long double r,
                           const std::vector<long double>& omega) const;

 private:
  int n_ = 1;
  int M_ = 1;
  std::vector<HomogeneousTerm> terms_;
  bool truncated_ = false;
  Rat min_degree_ = 0;
};

// Leading coefficient of a radial-leading elliptic symbol: p's top term must
// be c*|xi|^m with c > 0 constant across the sphere and the matrix diagonal.
Rat radial_leading_coefficient(const ClassicalSymbol& p);

// Formal logarithm of p for |xi| >= 1: m*log|xi| + log c + log(1 + u) with
// u = (p - c|xi|^m)/(c|xi|^m); components kept down to degree -J.
LogPolyhomSymbol series_log(const ClassicalSymbol& p, unsigned J);

// Degreewise product; log-powers add; truncation window intersected.
LogPolyhomSymbol symbol_product(const ClassicalSymbol& a,
                                const LogPolyhomSymbol& r);

}  // namespace symtrace

#endif
