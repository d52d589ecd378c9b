#ifndef SYMTRACE_PARSER_HPP
#define SYMTRACE_PARSER_HPP

#include <string>

#include "symtrace/symbol.hpp"

namespace symtrace {

// Text form of a symbol. Scalar: terms separated by ";", each term a
// homogeneous polynomial optionally divided by a power of |xi|. Matrix:
// "diag(entry, entry, ...)" with one term-list per diagonal entry.
// With M > 1 and scalar text, the scalar is replicated on the diagonal.
ClassicalSymbol parse_symbol(const std::string& text, int n, int M = 1);

// Canonical text for a symbol; parse_symbol(pretty(s)) reproduces s up to
// on-sphere equality of angular parts, and pretty is a fixed point on its
// own output.
std::string pretty(const ClassicalSymbol& s);

// Short grammar description for usage errors.
const char* grammar_excerpt();

}  // namespace symtrace

#endif
