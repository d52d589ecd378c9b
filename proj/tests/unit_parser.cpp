#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "symtrace/parser.hpp"

using namespace symtrace;

namespace {

std::string parse_error(const std::string& text, int n, int M = 1) {
  try {
    parse_symbol(text, n, M);
  } catch (const Error& e) {
    REQUIRE(e.kind() == ErrorKind::Parse);
    return e.what();
  }
  return "";
}

bool same_symbol(const ClassicalSymbol& a, const ClassicalSymbol& b) {
  if (a.n() != b.n() || a.M() != b.M()) return false;
  if (a.terms().size() != b.terms().size()) return false;
  for (size_t i = 0; i < a.terms().size(); ++i) {
    const auto& ta = a.terms()[i];
    const auto& tb = b.terms()[i];
    if (ta.degree != tb.degree || ta.K != tb.K) return false;
    const AngularPoly pa = ta.plain_angular();
    const AngularPoly pb = tb.plain_angular();
    for (int c = 0; c < a.M(); ++c)
      if (!pa.diag[c].equal_on_sphere(pb.diag[c])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("basic terms parse to the right degrees") {
  const ClassicalSymbol a = parse_symbol("xi1^2/|xi|^4", 2);
  REQUIRE(a.terms().size() == 1);
  CHECK(a.sigma() == Rat(-2));
  CHECK(a.terms().at(0).degree == Rat(-2));

  const ClassicalSymbol b = parse_symbol("1/|xi|^1", 1);
  CHECK(b.terms().at(0).degree == Rat(-1));

  const ClassicalSymbol c = parse_symbol("xi1^2 + xi2^2; xi1; 2", 2);
  REQUIRE(c.terms().size() == 3);
  CHECK(c.terms().at(0).degree == Rat(2));
  CHECK(c.terms().at(1).degree == Rat(1));
  CHECK(c.terms().at(2).degree == Rat(0));
}

TEST_CASE("rational coefficients and juxtaposition") {
  const ClassicalSymbol a = parse_symbol("3/2*xi1^2/|xi|^4", 1);
  REQUIRE(a.terms().size() == 1);
  CHECK(a.terms().at(0).degree == Rat(-2));
  Rat c;
  CHECK(a.terms().at(0).plain_angular().diag[0].is_constant(&c) == false);
  // coefficient survives: value on the sphere point +1 is 3/2
  CHECK(a.terms().at(0).plain_angular().diag[0].eval(std::vector<double>{1.0}) ==
        doctest::Approx(1.5));

  const ClassicalSymbol b = parse_symbol("2xi1^2", 1);
  CHECK(b.terms().at(0).plain_angular().diag[0].eval(std::vector<double>{1.0}) ==
        doctest::Approx(2.0));

  const ClassicalSymbol m = parse_symbol("xi1*xi2^3", 2);
  CHECK(m.sigma() == Rat(4));
}

TEST_CASE("terms of equal degree merge") {
  const ClassicalSymbol a = parse_symbol("xi1^2/|xi|^4; 1/|xi|^2", 2);
  REQUIRE(a.terms().size() == 1);
  CHECK(a.terms().at(0).degree == Rat(-2));
  const RatPoly sum = a.terms().at(0).plain_angular().diag[0];
  CHECK(sum.eval(std::vector<double>{1.0, 0.0}) == doctest::Approx(2.0));
  CHECK(sum.eval(std::vector<double>{0.0, 1.0}) == doctest::Approx(1.0));
}

TEST_CASE("diag builds matrix symbols, scalars replicate") {
  const ClassicalSymbol d = parse_symbol("diag(xi1^2, 1/|xi|^2)", 2, 2);
  CHECK(d.M() == 2);
  CHECK(d.sigma() == Rat(2));
  REQUIRE(d.terms().size() == 2);  // degrees 2 and -2

  const ClassicalSymbol r = parse_symbol("xi1^2", 2, 2);
  CHECK(r.M() == 2);
  const AngularPoly ang = r.terms().at(0).plain_angular();
  CHECK(ang.diag[0] == ang.diag[1]);
}

TEST_CASE("parse errors carry positions and pointed messages") {
  const std::string missing_pow = parse_error("xi1^2/|xi|", 1);
  CHECK(missing_pow.find("position") != std::string::npos);
  CHECK(missing_pow.find("^") != std::string::npos);

  CHECK(parse_error("", 1).find("position") != std::string::npos);
  CHECK(parse_error("xi1 + ", 1).find("position") != std::string::npos);
  CHECK(parse_error("xi3", 2).find("position") != std::string::npos);
  CHECK(parse_error("xi1^2 @", 1).find("position") != std::string::npos);
  CHECK(parse_error("xi1^2 + xi2", 2).find("position") != std::string::npos);
}

TEST_CASE("mixed-degree polynomials inside one term are rejected") {
  CHECK(!parse_error("xi1^2 + xi1", 1).empty());
  CHECK(!parse_error("xi1 + 1", 1).empty());
}

TEST_CASE("pretty is a parse fixed point up to sphere equality") {
  const std::vector<std::string> corpus{
      "1/|xi|^1",
      "xi1^2/|xi|^4",
      "xi1^2/|xi|^3; 1/|xi|^2",
      "3/2*xi1^2 + xi2^2; xi1/|xi|^2",
      "xi1*xi2*xi3/|xi|^6; 1/|xi|^2",
  };
  const std::vector<int> dims{1, 1, 1, 2, 3};
  for (size_t i = 0; i < corpus.size(); ++i) {
    const ClassicalSymbol s = parse_symbol(corpus[i], dims[i]);
    const std::string text = pretty(s);
    const ClassicalSymbol t = parse_symbol(text, dims[i]);
    CHECK(same_symbol(s, t));
    CHECK(pretty(t) == text);
  }
}

TEST_CASE("pretty round-trips matrix symbols") {
  const ClassicalSymbol s = parse_symbol("diag(xi1^2; 1, 2/|xi|^2)", 2, 2);
  const ClassicalSymbol t = parse_symbol(pretty(s), 2, 2);
  CHECK(same_symbol(s, t));
}
