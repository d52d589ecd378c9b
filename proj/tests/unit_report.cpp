#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "symtrace/densities.hpp"
#include "symtrace/laurent.hpp"
#include "symtrace/parser.hpp"
#include "symtrace/report.hpp"
#include "symtrace/resolvent.hpp"
#include "symtrace/verify.hpp"

using namespace symtrace;

TEST_CASE("scalar json distinguishes exact and numeric values") {
  const auto je = scalar_json(ScalarValue::exact(Rat(1, 2), -1));
  CHECK(je.at("kind") == "exact");
  CHECK(je.at("rational") == "1/2");
  CHECK(je.at("pi_power") == -1);
  CHECK(je.at("decimal").get<double>() == doctest::Approx(0.15915494309189535));
  CHECK(!je.contains("error_bound"));

  const auto jn = scalar_json(ScalarValue::log_of_rat(Rat(3)));
  CHECK(jn.at("kind") == "numeric");
  CHECK(jn.contains("error_bound"));
  CHECK(!jn.contains("rational"));
  CHECK(jn.at("decimal").get<double>() == doctest::Approx(1.0986122886681098));
}

TEST_CASE("density report serializations carry the full table") {
  const ClassicalSymbol a = parse_symbol("xi1^2/|xi|^3; 1/|xi|^2", 1);
  const DensityReport rep = density_report(a);
  const auto j = density_json(rep, parity_class(a));
  CHECK(j.at("tr_x").at("kind") == "exact");
  CHECK(j.at("tr_x").at("rational") == "5/2");
  CHECK(j.at("tr_x").at("pi_power") == -1);
  CHECK(j.at("parity") == to_string(parity_class(a)));
  REQUIRE(j.at("rows").size() == 2);
  CHECK(j.at("rows").at(0).at("degree") == "-1");
  CHECK(j.at("rows").at(0).at("branch") == "ball_log");
  CHECK(j.at("rows").at(1).at("branch") == "absolute");
  CHECK(!j.contains("res_x0_log"));

  const std::string csv = density_csv(rep);
  CHECK(csv.rfind("degree,branch,K,value,error_bound\n", 0) == 0);
  CHECK(csv.find("ball_log") != std::string::npos);

  const std::string text = density_pretty(rep, parity_class(a));
  CHECK(text.find("5/2") != std::string::npos);
}

TEST_CASE("log-weight reports include the extra density") {
  const ClassicalSymbol a = parse_symbol("1/|xi|^1", 1);
  const ClassicalSymbol p = parse_symbol("4*xi1^2; 1", 1);
  const LogPolyhomSymbol lp = series_log(p, 8);
  const DensityReport rep = density_report(a, &lp);
  const auto j = density_json(rep, parity_class(a));
  REQUIRE(j.contains("res_x0_log"));
  CHECK(j.at("res_x0_log").at("kind") == "numeric");
}

TEST_CASE("expansion serializations order rows from the top") {
  const ClassicalSymbol a = parse_symbol("1/|xi|^1", 1);
  const AsymptoticExpansion e = model_trace_expansion(a, 2, 1);
  const auto j = expansion_json(e);
  CHECK(j.at("power") == 1);
  REQUIRE(j.at("rows").size() >= 2);
  // descending exponent, log row before plain row at a tie
  CHECK(j.at("rows").at(0).at("exponent") == "-1");
  CHECK(j.at("rows").at(0).at("log_power") == 1);
  CHECK(j.at("rows").at(1).at("exponent") == "-1");
  CHECK(j.at("rows").at(1).at("log_power") == 0);
  CHECK(j.at("rows").at(0).at("branches").get<std::string>().find("log") !=
        std::string::npos);

  const std::string csv = expansion_csv(e);
  CHECK(csv.rfind("exponent,log_power,value,error_bound,branches\n", 0) == 0);

  const ZetaPoleData z = resolvent_to_zeta_full(e, a.sigma(), Rat(2), 1);
  const auto jz = zeta_json(z);
  CHECK(jz.at("N") == 1);
  CHECK(jz.at("poles").contains("0"));
  const std::string zcsv = zeta_csv(z);
  CHECK(zcsv.rfind("location,gz_order2,gz_order1,z_residue,z_regular\n", 0) == 0);
}

TEST_CASE("fit reports serialize verdicts and errors") {
  FitReport rep;
  rep.ok = true;
  rep.condition = 12.0;
  rep.residual = 1e-9;
  FitRow row;
  row.exponent = Rat(-1, 2);
  row.log_power = 0;
  row.fitted = 0.5;
  row.has_symbolic = true;
  row.symbolic = 0.5;
  row.rel_error = 1e-9;
  row.verdict = "ok";
  rep.rows.push_back(row);
  FitRow bare;
  bare.exponent = Rat(-3, 2);
  bare.fitted = -0.25;
  rep.rows.push_back(bare);

  const auto j = fit_json(rep);
  CHECK(j.at("ok") == true);
  CHECK(j.at("rows").at(0).at("verdict") == "ok");
  CHECK(j.at("rows").at(0).contains("symbolic"));
  CHECK(!j.at("rows").at(1).contains("symbolic"));

  const std::string csv = fit_csv(rep);
  CHECK(csv.rfind("exponent,log_power,fitted,symbolic,rel_error,verdict\n", 0) == 0);
}

TEST_CASE("verify report serializations expose the gate") {
  VerifyReport rep;
  rep.results.push_back({"alpha-harmonic-correction", true, "exact match", 3});
  rep.results.push_back({"parity-vanishing", false, "nonzero residue", 5});
  CHECK(!rep.all_pass());
  const auto j = verify_json(rep);
  CHECK(j.at("all_pass") == false);
  REQUIRE(j.at("criteria").size() == 2);
  CHECK(j.at("criteria").at(0).at("name") == "alpha-harmonic-correction");
  CHECK(j.at("criteria").at(0).at("pass") == true);
  CHECK(j.at("criteria").at(1).at("ms") == 5);

  const std::string text = verify_pretty(rep);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("FAIL") != std::string::npos);
}
