#ifndef SYMTRACE_ANGULAR_HPP
#define SYMTRACE_ANGULAR_HPP

#include <vector>

#include "symtrace/polynomial.hpp"
#include "symtrace/scalar.hpp"

namespace symtrace {

// Fiber part of a homogeneous symbol component: a diagonal M x M matrix of
// polynomials restricted to the unit sphere S^{n-1}.
struct AngularPoly {
  int n = 1;
  int M = 1;
  std::vector<RatPoly> diag;

  AngularPoly() : diag{RatPoly(1)} {}
  AngularPoly(int n_, int M_) : n(n_), M(M_), diag(M_, RatPoly(n_)) {}
  static AngularPoly scalar(const RatPoly& p) {
    AngularPoly a(p.vars(), 1);
    a.diag[0] = p;
    return a;
  }
  static AngularPoly constant(int n, int M, const Rat& c);

  RatPoly tr() const;
  bool is_zero() const;
  bool is_zero_on_sphere() const;

  AngularPoly operator+(const AngularPoly& o) const;
  AngularPoly operator-() const;
  AngularPoly scale(const Rat& c) const;
  // Entrywise product; an M == 1 factor broadcasts over the other side.
  AngularPoly operator*(const AngularPoly& o) const;

  // a(-omega) == +a(omega) / -a(omega) as functions on the sphere.
  bool even_on_sphere() const;
  bool odd_on_sphere() const;

  std::string to_string() const;
};

// Integral over S^{n-1} of a monomial/polynomial, dS measure, n >= 1.
// No (2pi)^{-n} normalization here; callers apply it. Exact: every even
// monomial moment is rational * pi^floor(n/2), odd moments vanish. For n = 1
// the sphere is {-1,+1} and the moment is p(1) + p(-1).
ScalarValue sphere_moment(const RatPoly& p, int n);

// Trace first, then integrate.
ScalarValue sphere_moment(const AngularPoly& a);

}  // namespace symtrace

#endif
