#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "symtrace/densities.hpp"
#include "symtrace/laurent.hpp"
#include "symtrace/numeric.hpp"
#include "symtrace/oracle.hpp"
#include "symtrace/parser.hpp"
#include "symtrace/report.hpp"
#include "symtrace/resolvent.hpp"
#include "symtrace/verify.hpp"

namespace {

using namespace symtrace;

struct Options {
  int n = 1;
  int M = 1;
  std::string symbol;
  std::string p;
  std::string p2;
  unsigned m = 2;
  unsigned N = 1;
  unsigned J = 8;
  int precision = 0;
  std::string format = "pretty";
  std::string out;
  double theta = 0.0;
  unsigned ladder = 0;
  double t0 = 64.0;
  double rho = 4.0;
  std::string only;
  bool corrupt_alpha = false;
};

void emit(const Options& o, const std::string& pretty_text,
          const nlohmann::json& j, const std::string& csv_text) {
  std::string payload;
  if (o.format == "json")
    payload = j.dump(2) + "\n";
  else if (o.format == "csv")
    payload = csv_text;
  else
    payload = pretty_text;
  if (o.out.empty()) {
    std::fputs(payload.c_str(), stdout);
  } else {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) fail(ErrorKind::Domain, "cannot open output file " + o.out);
    f << payload;
  }
}

// The standard comparison weight |xi|^m + 1 as a polynomial symbol.
ClassicalSymbol model_weight(int n, unsigned m) {
  if (m == 0 || m % 2 != 0)
    fail(ErrorKind::Domain, "weight order must be a positive even integer");
  RatPoly r2(n);
  for (int i = 1; i <= n; ++i) {
    const RatPoly v = RatPoly::variable(n, i);
    r2 = r2 + v * v;
  }
  ClassicalSymbol p(n, 1);
  p.add_term(Rat(static_cast<long>(m)), AngularPoly::scalar(r2.pow(m / 2)));
  p.add_term(Rat(0), AngularPoly::constant(n, 1, Rat(1)));
  p.finalize();
  return p;
}

std::string scalar_pretty(const char* label, const ScalarValue& v) {
  return std::string(label) + " = " + v.to_string() + "\n";
}

std::string scalar_csv(const ScalarValue& v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "value,error_bound\n%.17g,%.17g\n",
                v.value().to_double(), v.error_bound().to_double());
  return buf;
}

void cmd_density(const Options& o, bool with_log) {
  const ClassicalSymbol a = parse_symbol(o.symbol, o.n, o.M);
  if (with_log) {
    const ClassicalSymbol p = parse_symbol(o.p, o.n, o.M);
    const LogPolyhomSymbol lp = series_log(p, o.J);
    const DensityReport rep = density_report(a, &lp);
    emit(o, density_pretty(rep, parity_class(a)),
         density_json(rep, parity_class(a)), density_csv(rep));
  } else {
    const DensityReport rep = density_report(a);
    emit(o, density_pretty(rep, parity_class(a)),
         density_json(rep, parity_class(a)), density_csv(rep));
  }
}

void cmd_expand(const Options& o) {
  const ClassicalSymbol a = parse_symbol(o.symbol, o.n, o.M);
  const AsymptoticExpansion e = model_trace_expansion(a, o.m, o.N);
  const ZetaPoleData z =
      resolvent_to_zeta_full(e, a.sigma(), Rat(static_cast<long>(o.m)), o.n);
  emit(o, expansion_pretty(e) + zeta_pretty(z),
       nlohmann::json{{"expansion", expansion_json(e)},
                      {"zeta_poles", zeta_json(z)}},
       expansion_csv(e) + "\n" + zeta_csv(z));
}

void cmd_c0(const Options& o) {
  const ClassicalSymbol a = parse_symbol(o.symbol, o.n, o.M);
  const ClassicalSymbol p = parse_symbol(o.p, o.n, o.M);
  const ScalarValue v = c0(a, p);
  emit(o, scalar_pretty("c0", v), nlohmann::json{{"value", scalar_json(v)}},
       scalar_csv(v));
}

void cmd_defect(const Options& o) {
  const ClassicalSymbol a = parse_symbol(o.symbol, o.n, o.M);
  const ClassicalSymbol p = parse_symbol(o.p, o.n, o.M);
  const ClassicalSymbol q = parse_symbol(o.p2, o.n, o.M);
  const ScalarValue td = trace_defect(a, p, q);
  const ScalarValue dc = difference_coefficient(a, p, q, o.N);
  emit(o,
       scalar_pretty("trace defect          ", td) +
           scalar_pretty("difference coefficient", dc),
       nlohmann::json{{"trace_defect", scalar_json(td)},
                      {"difference_coefficient", scalar_json(dc)}},
       "quantity,value,error_bound\ntrace_defect," +
           std::to_string(td.to_double()) + "," +
           std::to_string(td.error_bound().to_double()) +
           "\ndifference_coefficient," + std::to_string(dc.to_double()) + "," +
           std::to_string(dc.error_bound().to_double()) + "\n");
}

void cmd_fit(const Options& o) {
  const ClassicalSymbol a = parse_symbol(o.symbol, o.n, o.M);
  const ClassicalSymbol p =
      o.p.empty() ? model_weight(o.n, o.m) : parse_symbol(o.p, o.n, o.M);
  const AsymptoticExpansion e = model_trace_expansion(a, o.m, o.N);
  std::vector<LadderSlot> ladder = fit_ladder(e);
  if (o.ladder && o.ladder < ladder.size()) ladder.resize(o.ladder);
  RaySampler s;
  s.theta = o.theta;
  s.t0 = static_cast<long double>(o.t0);
  s.rho = static_cast<long double>(o.rho);
  const auto samples =
      sample_ray(a, p, o.N, s, static_cast<unsigned>(ladder.size()));
  FitReport rep = fit_expansion(samples, o.theta, ladder);
  attach_reference(rep, e, 1e-6);
  emit(o, fit_pretty(rep), fit_json(rep), fit_csv(rep));
}

int cmd_verify(const Options& o) {
  VerifyOptions vo;
  vo.only = o.only;
  vo.corrupt_alpha = o.corrupt_alpha;
  const VerifyReport rep = run_verify(vo);
  std::string csv = "name,pass,ms,detail\n";
  for (const auto& c : rep.results)
    csv += c.name + "," + (c.pass ? "1" : "0") + "," +
           std::to_string(c.ms) + ",\"" + c.detail + "\"\n";
  emit(o, verify_pretty(rep), verify_json(rep), csv);
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "symtrace: finite-part, residue, and resolvent-trace expansion "
      "coefficients for exactly representable classical symbols"};
  app.set_config("--config");

  Options o;
  std::function<int()> run;

  auto add_common = [&](CLI::App* cmd, bool needs_symbol) {
    cmd->add_option("--n", o.n, "dimension (1..3)")->capture_default_str();
    cmd->add_option("--M", o.M, "matrix size")->capture_default_str();
    auto* s = cmd->add_option("--symbol", o.symbol,
                              "symbol text, e.g. \"xi1^2/|xi|^4; 1/|xi|^2\"");
    if (needs_symbol) s->required();
    cmd->add_option("--precision", o.precision,
                    "working precision in decimal digits")
        ->envname("SYMTRACE_PRECISION");
    cmd->add_option("--format", o.format, "pretty | json | csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out, "write the report to this file");
  };

  auto* fp = app.add_subcommand("fp", "finite-part integral of a symbol");
  add_common(fp, true);
  fp->callback([&] { run = [&] { cmd_density(o, false); return 0; }; });

  auto* res = app.add_subcommand("res", "residue density of a symbol");
  add_common(res, true);
  res->callback([&] { run = [&] { cmd_density(o, false); return 0; }; });

  auto* logsym =
      app.add_subcommand("logsym", "densities of a against log of a weight");
  add_common(logsym, true);
  logsym->add_option("--p", o.p, "elliptic weight symbol")->required();
  logsym->add_option("--J", o.J, "log-series depth")->capture_default_str();
  logsym->callback([&] { run = [&] { cmd_density(o, true); return 0; }; });

  auto* expand = app.add_subcommand(
      "expand", "resolvent trace expansion and its zeta pole data");
  add_common(expand, true);
  expand->add_option("--m", o.m, "weight order (even, > order + n)")
      ->capture_default_str();
  expand->add_option("--N", o.N, "resolvent power")->capture_default_str();
  expand->callback([&] { run = [&] { cmd_expand(o); return 0; }; });

  auto* c0cmd = app.add_subcommand("c0", "constant trace coefficient");
  add_common(c0cmd, true);
  c0cmd->add_option("--p", o.p, "elliptic weight symbol")->required();
  c0cmd->callback([&] { run = [&] { cmd_c0(o); return 0; }; });

  auto* defect = app.add_subcommand(
      "defect", "trace defect between two weights, with the resolvent route");
  add_common(defect, true);
  defect->add_option("--p", o.p, "first weight")->required();
  defect->add_option("--p2", o.p2, "second weight")->required();
  defect->add_option("--N", o.N, "resolvent power")->capture_default_str();
  defect->callback([&] { run = [&] { cmd_defect(o); return 0; }; });

  auto* fit = app.add_subcommand(
      "fit", "fit numeric trace samples against the symbolic ladder");
  add_common(fit, true);
  fit->add_option("--m", o.m, "weight order")->capture_default_str();
  fit->add_option("--N", o.N, "resolvent power")->capture_default_str();
  fit->add_option("--p", o.p, "weight override (default |xi|^m + 1)");
  fit->add_option("--theta", o.theta, "ray angle of -lambda")
      ->capture_default_str();
  fit->add_option("--ladder", o.ladder, "keep at most this many slots");
  fit->add_option("--t0", o.t0, "first sample magnitude")
      ->capture_default_str();
  fit->add_option("--rho", o.rho, "sample ratio")->capture_default_str();
  fit->callback([&] { run = [&] { cmd_fit(o); return 0; }; });

  auto* verify =
      app.add_subcommand("verify", "run the acceptance criteria matrix");
  add_common(verify, false);
  verify->add_option("--only", o.only, "run only criteria containing this");
  verify->add_flag("--corrupt-alpha", o.corrupt_alpha)->group("");
  verify->callback([&] { run = [&] { return cmd_verify(o); }; });

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << grammar_excerpt() << "\n";
    return 2;
  }

  if (o.precision > 0) set_default_precision_digits(o.precision);

  try {
    return run ? run() : 2;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) {
      std::cerr << "error: " << e.what() << "\n\n" << grammar_excerpt() << "\n";
      return 2;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
