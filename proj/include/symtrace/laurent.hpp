#ifndef SYMTRACE_LAURENT_HPP
#define SYMTRACE_LAURENT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symtrace/expansion.hpp"
#include "symtrace/scalar.hpp"

namespace symtrace {

// Finite window of a Laurent expansion around a point: coefficients are
// exactly zero below lo and unknown above hi. Window arithmetic keeps track
// of how far a product or sum stays trustworthy.
class LaurentSeries {
 public:
  LaurentSeries(const Rat& point, long lo, long hi);

  const Rat& point() const { return point_; }
  long lo() const { return lo_; }
  long hi() const { return hi_; }

  void set(long k, const ScalarValue& v);
  void add(long k, const ScalarValue& v);
  // Exact zero below lo; stored value in the window; error above hi.
  ScalarValue coeff(long k) const;
  const std::map<long, ScalarValue>& coeffs() const { return c_; }

 private:
  Rat point_;
  long lo_;
  long hi_;
  std::map<long, ScalarValue> c_;
};

// Exact Cauchy product / sum on the overlapping trust window.
LaurentSeries series_mul(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries series_add(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries series_scale(const LaurentSeries& f, const ScalarValue& c);

enum class SeriesKind {
  Gamma,          // Gamma(s) at 0: 1/s - gamma + (gamma^2/2 + pi^2/12)s - ...
  InvGammaShift,  // M!/Gamma(M+1-s) at 0 (Taylor; constant term 1)
  GM,             // M!/((s-M)...(s-1)) = (-1)^M (1 + H_M s + ...)
  SinFactor,      // (1/pi) sin(pi(s-M)) = (-1)^M (s - pi^2 s^3/6 + ...)
};

// Reference series at 0, trustworthy through order T. M is ignored for
// Gamma. Harmonic-number data is exact; gamma and odd zeta values are
// numeric with error bounds; even zeta values are exact rational * pi^2k.
LaurentSeries known_series(SeriesKind kind, unsigned M, unsigned T);
// Name form: "gamma", "inv_gamma_shift(M)", "g_M(M)", "sin_factor(M)".
LaurentSeries known_series(const std::string& name, unsigned T);

// 1/Gamma(s) at 0: s + gamma s^2 + ...; companion of SeriesKind::Gamma.
LaurentSeries reciprocal_gamma_series(unsigned T);

// Laurent data of the zeta-type functions at one pole location s0.
// gz_* describe Gamma(s) * zeta(s): coefficient of (s-s0)^{-2} and
// (s-s0)^{-1}. z_residue is the residue of zeta itself. z_regular (the
// value of zeta minus its pole) is reported only where the window algebra
// proves the unknown analytic remainder cannot reach it.
struct ZetaPole {
  Rat location;
  ScalarValue gz_order2;
  ScalarValue gz_order1;
  ScalarValue z_residue;
  bool has_regular = false;
  ScalarValue z_regular;
};

struct ZetaPoleData {
  unsigned N = 1;
  std::vector<ZetaPole> poles;  // descending location; s = 0 always present
};

// Laurent pair of zeta at 0 from the resolvent-trace pair at exponent -N:
// C_{-1} = a and C_0 = b + alpha_N a with alpha_N = H_{N-1}, computed by a
// windowed series product and asserted against the closed form.
std::pair<ScalarValue, ScalarValue> resolvent_to_zeta_at_zero(
    const ScalarValue& log_coeff, const ScalarValue& const_coeff, unsigned N);

// Full pole map of Gamma*zeta and zeta from a resolvent trace expansion:
// every reported exponent x becomes the pole location s0 = x + N. Exponents
// must sit on the grid x = -k-N (log pairs allowed) or x = (sigma+n-j)/m - N
// with j a natural number, and must be negative.
ZetaPoleData resolvent_to_zeta_full(const AsymptoticExpansion& e,
                                    const Rat& sigma, const Rat& m, int n);

// Regular value of zeta at 0 (the constant trace coefficient).
ScalarValue zeta_regular_value(const ZetaPoleData& z);

}  // namespace symtrace

#endif
