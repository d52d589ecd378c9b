#ifndef SYMTRACE_COMMON_HPP
#define SYMTRACE_COMMON_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace symtrace {

using Rat = mpq_class;

enum class ErrorKind {
  Parse,
  Domain,
  Truncation,
  Grid,
  Quadrature,
  Conditioning,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, msg);
}

struct RatLess {
  bool operator()(const Rat& a, const Rat& b) const { return cmp(a, b) < 0; }
};

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

// Checked narrowing; values in this library stay tiny.
inline long rat_to_long(const Rat& q) {
  if (!rat_is_integer(q)) fail(ErrorKind::Internal, "expected integer rational");
  if (!q.get_num().fits_slong_p()) fail(ErrorKind::Internal, "rational out of range");
  return q.get_num().get_si();
}

inline Rat rat_floor(const Rat& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return Rat(f);
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

Rat parse_rat(const std::string& s);          // "p/q" or integer
Rat binomial(const Rat& beta, unsigned k);    // generalized binomial coefficient
Rat harmonic(unsigned k);                     // H_k, H_0 = 0
Rat factorial(unsigned k);

}  // namespace symtrace

#endif
