#include "symtrace/parser.hpp"

#include <cctype>
#include <cstring>
#include <map>
#include <sstream>
#include <vector>

namespace symtrace {

namespace {

[[noreturn]] void syntax(size_t pos, const std::string& what) {
  std::ostringstream os;
  os << "parse error at position " << pos << ": " << what;
  fail(ErrorKind::Parse, os.str());
}

struct Lexer {
  const std::string& s;
  size_t i = 0;

  explicit Lexer(const std::string& text) : s(text) {}

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  char peek() {
    skip();
    return i < s.size() ? s[i] : '\0';
  }
  bool accept(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) syntax(i, std::string("expected '") + c + "' " + what);
  }
  bool accept_word(const char* w) {
    skip();
    size_t len = std::strlen(w);
    if (s.compare(i, len, w) == 0) {
      i += len;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip();
    return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
  }
  unsigned long number() {
    skip();
    if (!peek_digit()) syntax(i, "expected a number");
    unsigned long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + static_cast<unsigned long>(s[i] - '0');
      if (v > 1000000000UL) syntax(i, "number too large");
      ++i;
    }
    return v;
  }
};

// factor := "xi" index [ "^" nat ]
bool parse_factor(Lexer& lx, int n, std::vector<unsigned>& expo) {
  size_t save = lx.i;
  if (!lx.accept_word("xi")) return false;
  if (!lx.peek_digit()) {
    lx.i = save;
    return false;  // could be the "|xi|" of the term divider
  }
  unsigned long idx = lx.number();
  if (idx < 1 || idx > static_cast<unsigned long>(n))
    syntax(save, "variable index out of range for dimension " + std::to_string(n));
  unsigned long e = 1;
  if (lx.accept('^')) e = lx.number();
  expo[idx - 1] += static_cast<unsigned>(e);
  return true;
}

// monomial := rat ['*' vars] | rat vars | vars
RatPoly parse_monomial(Lexer& lx, int n, bool negative) {
  Rat coef = negative ? -1 : 1;
  bool have_coef = false;
  if (lx.peek_digit()) {
    unsigned long num = lx.number();
    Rat c(static_cast<long>(num));
    size_t save = lx.i;
    if (lx.accept('/')) {
      if (lx.peek_digit()) {
        unsigned long den = lx.number();
        if (den == 0) syntax(save, "zero denominator");
        c /= Rat(static_cast<long>(den));
      } else {
        lx.i = save;  // the '/' belongs to the |xi| divider
      }
    }
    coef *= c;
    have_coef = true;
  }
  std::vector<unsigned> expo(static_cast<size_t>(n), 0);
  bool have_vars = false;
  if (have_coef) {
    if (lx.accept('*')) {
      if (!parse_factor(lx, n, expo))
        syntax(lx.i, "expected a variable after '*'");
      have_vars = true;
    } else if (lx.i < lx.s.size() && lx.s.compare(lx.i, 2, "xi") == 0) {
      have_vars = parse_factor(lx, n, expo);  // juxtaposition like "2xi1"
    }
  } else {
    if (!parse_factor(lx, n, expo)) syntax(lx.i, "expected a monomial");
    have_vars = true;
  }
  while (have_vars) {
    size_t save = lx.i;
    if (lx.accept('*')) {
      if (!parse_factor(lx, n, expo))
        syntax(lx.i, "expected a variable after '*'");
    } else if (!parse_factor(lx, n, expo)) {
      lx.i = save;
      break;
    }
  }
  if (!have_vars) return RatPoly::constant(n, coef);
  return RatPoly::monomial(n, expo, coef);
}

// poly := [sign] monomial { sign monomial }
RatPoly parse_poly(Lexer& lx, int n) {
  RatPoly p(n);
  bool neg = false;
  if (lx.accept('-'))
    neg = true;
  else
    lx.accept('+');
  p = p + parse_monomial(lx, n, neg);
  while (true) {
    if (lx.accept('+'))
      neg = false;
    else if (lx.accept('-'))
      neg = true;
    else
      break;
    p = p + parse_monomial(lx, n, neg);
  }
  return p;
}

struct ParsedTerm {
  Rat degree;
  RatPoly angular;
};

// term := poly [ "/" "|xi|" "^" nat ], parens around the poly allowed
bool parse_term(Lexer& lx, int n, ParsedTerm& out) {
  size_t start = lx.i;
  const bool wrapped = lx.accept('(');
  RatPoly p = parse_poly(lx, n);
  if (wrapped) lx.expect(')', "to close the parenthesized group");
  long denom_pow = 0;
  size_t save = lx.i;
  if (lx.accept('/')) {
    if (!lx.accept_word("|xi|")) {
      lx.i = save;
      syntax(save, "denominator must be a power of |xi|");
    }
    lx.expect('^', "after |xi|");
    denom_pow = static_cast<long>(lx.number());
  }
  if (p.is_zero()) return false;
  int h = 0;
  if (!p.is_homogeneous(&h))
    syntax(start,
           "additive group is not homogeneous; separate degrees with ';'");
  out.degree = Rat(h - denom_pow);
  out.angular = p;
  return true;
}

// entry := term { ";" term }, collected per degree
void parse_entry(Lexer& lx, int n, std::map<Rat, RatPoly, RatLess>& by_degree) {
  while (true) {
    ParsedTerm t;
    if (parse_term(lx, n, t)) {
      auto it = by_degree.find(t.degree);
      if (it == by_degree.end())
        by_degree.emplace(t.degree, t.angular);
      else
        it->second = it->second + t.angular;
    }
    if (!lx.accept(';')) break;
  }
}

}  // namespace

ClassicalSymbol parse_symbol(const std::string& text, int n, int M) {
  if (n < 1) fail(ErrorKind::Domain, "dimension must be at least 1");
  if (M < 1) fail(ErrorKind::Domain, "matrix size must be at least 1");
  Lexer lx(text);
  std::vector<std::map<Rat, RatPoly, RatLess>> entries;
  if (lx.accept_word("diag")) {
    lx.expect('(', "after diag");
    do {
      entries.emplace_back();
      parse_entry(lx, n, entries.back());
    } while (lx.accept(','));
    lx.expect(')', "closing diag");
    if (static_cast<int>(entries.size()) != M)
      fail(ErrorKind::Parse, "diag has " + std::to_string(entries.size()) +
                                 " entries but matrix size is " +
                                 std::to_string(M));
  } else {
    entries.emplace_back();
    parse_entry(lx, n, entries.front());
    while (static_cast<int>(entries.size()) < M) entries.push_back(entries.front());
  }
  if (!lx.done()) syntax(lx.i, "unexpected trailing input");

  std::map<Rat, bool, RatLess> degrees;
  for (const auto& e : entries)
    for (const auto& [d, p] : e) degrees[d] = true;

  ClassicalSymbol sym(n, M);
  for (const auto& [d, unused] : degrees) {
    (void)unused;
    AngularPoly ang(n, M);
    for (int ch = 0; ch < M; ++ch) {
      auto it = entries[static_cast<size_t>(ch)].find(d);
      if (it != entries[static_cast<size_t>(ch)].end()) ang.diag[ch] = it->second;
    }
    sym.add_term(d, ang);
  }
  sym.finalize();
  return sym;
}

namespace {

// Emit one homogeneous group "poly/|xi|^k" realizing the given degree.
void emit_group(std::ostringstream& os, bool& first, const RatPoly& part,
                const Rat& degree) {
  if (part.is_zero()) return;
  RatPoly hom = part.homogenized();
  long h = hom.degree();
  long d_num = rat_to_long(degree);  // degrees of printable symbols: integers
  long k = h - d_num;
  while (k < 0) {
    // raise the polynomial degree by |xi|^2 factors until the divider is >= 0
    RatPoly r2(hom.vars());
    for (int i = 1; i <= hom.vars(); ++i) {
      RatPoly v = RatPoly::variable(hom.vars(), i);
      r2 = r2 + v * v;
    }
    hom = hom * r2;
    k += 2;
  }
  if (!first) os << "; ";
  first = false;
  bool wrap = k > 0 && hom.terms().size() > 1;
  if (wrap) os << "(";
  os << hom.to_string();
  if (wrap) os << ")";
  if (k > 0) os << "/|xi|^" << k;
}

void emit_entry(std::ostringstream& os, const ClassicalSymbol& s, int channel) {
  bool first = true;
  for (const auto& t : s.terms()) {
    if (!rat_is_integer(t.degree))
      fail(ErrorKind::Domain, "cannot print a symbol with fractional degrees");
    RatPoly ang = t.plain_angular().diag[channel];
    emit_group(os, first, ang.even_part(), t.degree);
    emit_group(os, first, ang.odd_part(), t.degree);
  }
  if (first) os << "0";
}

}  // namespace

std::string pretty(const ClassicalSymbol& s) {
  std::ostringstream os;
  if (s.M() > 1) {
    os << "diag(";
    for (int ch = 0; ch < s.M(); ++ch) {
      if (ch) os << ", ";
      emit_entry(os, s, ch);
    }
    os << ")";
  } else {
    emit_entry(os, s, 0);
  }
  return os.str();
}

const char* grammar_excerpt() {
  return "symbol  := term (';' term)*  or  diag(symbol, symbol, ...)\n"
         "term    := poly ['/' '|xi|^' nat]   (parens around poly allowed)\n"
         "poly    := ['-'] mono (('+'|'-') mono)*   (one homogeneous degree)\n"
         "mono    := rat ['*' vars] | vars          rat := nat ['/' nat]\n"
         "vars    := xi<i> ['^' nat] ('*' xi<i> ['^' nat])*\n"
         "example := \"xi1^2/|xi|^4; 3/2*xi2/|xi|^3\"";
}

}  // namespace symtrace
