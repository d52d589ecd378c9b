#include <cstdio>

#include "symtrace/verify.hpp"

// Runs the full acceptance matrix and prints one line per criterion.
int main() {
  const symtrace::VerifyReport rep = symtrace::run_verify({});
  std::fputs(symtrace::verify_pretty(rep).c_str(), stdout);
  return rep.all_pass() ? 0 : 1;
}
