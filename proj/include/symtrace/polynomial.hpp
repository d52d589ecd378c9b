#ifndef SYMTRACE_POLYNOMIAL_HPP
#define SYMTRACE_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "symtrace/common.hpp"

namespace symtrace {

// Multivariate polynomial in xi_1..xi_n with rational coefficients.
// Monomials are exponent vectors of fixed length n; the map ordering makes
// iteration (and printing) deterministic.
class RatPoly {
public:
  using Expo = std::vector<unsigned>;

  explicit RatPoly(int n = 1) : n_(n) {}
  static RatPoly constant(int n, const Rat& c);
  static RatPoly variable(int n, int i);  // xi_i, 1-based
  static RatPoly monomial(int n, const Expo& e, const Rat& c);

  int vars() const { return n_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const;  // max total degree; -1 for the zero polynomial
  bool is_homogeneous(int* deg = nullptr) const;
  bool is_constant(Rat* value = nullptr) const;

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator-() const;
  RatPoly scale(const Rat& c) const;
  RatPoly pow(unsigned k) const;

  void add_term(const Expo& e, const Rat& c);

  // Parity split by total monomial degree.
  RatPoly even_part() const;
  RatPoly odd_part() const;

  // Canonical representative modulo xi_1^2 = 1 - xi_2^2 - ... - xi_n^2.
  // Faithful for functions on the unit sphere; preserves degree parity.
  RatPoly sphere_canonical() const;
  bool is_zero_on_sphere() const { return sphere_canonical().is_zero(); }
  bool equal_on_sphere(const RatPoly& o) const { return (*this - o).is_zero_on_sphere(); }

  // Homogeneous representative of the same sphere function, multiplying each
  // monomial by (xi_1^2+...+xi_n^2)^j. Requires all degrees of one parity.
  RatPoly homogenized() const;

  // sup_{|omega|=1} |p(omega)| <= sum of |coefficients|.
  Rat coeff_abs_sum() const;

  template <typename T>
  T eval(const std::vector<T>& x) const {
    T acc = T(0);
    for (const auto& [e, c] : c_) {
      T m = T(static_cast<double>(c.get_d()));
      for (int i = 0; i < n_; ++i)
        for (unsigned k = 0; k < e[i]; ++k) m = m * x[i];
      acc = acc + m;
    }
    return acc;
  }

  const std::map<Expo, Rat>& terms() const { return c_; }
  bool operator==(const RatPoly& o) const { return n_ == o.n_ && c_ == o.c_; }

  std::string to_string() const;

private:
  int n_;
  std::map<Expo, Rat> c_;
};

}  // namespace symtrace

#endif
