#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <regex>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string output;  // stdout and stderr combined
};

std::string bin() {
  const char* b = std::getenv("SYMTRACE_BIN");
  REQUIRE(b != nullptr);
  return b;
}

std::string docs() {
  const char* d = std::getenv("SYMTRACE_DOCS");
  REQUIRE(d != nullptr);
  return d;
}

RunResult run(const std::string& args) {
  RunResult r;
  const std::string cmd = bin() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof buf, pipe)) r.output.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json load_json_file(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  json j;
  f >> j;
  return j;
}

// Subset validator: type / enum / pattern / required / properties /
// additionalProperties / items / local file $ref. Enough to pin the
// documented shape without dragging in a full validator.
void validate(const json& schema, const json& value, const std::string& dir,
              const std::string& where) {
  if (schema.contains("$ref")) {
    const std::string ref = schema.at("$ref").get<std::string>();
    validate(load_json_file(dir + "/" + ref), value, dir, where);
    return;
  }
  if (schema.contains("enum")) {
    bool hit = false;
    for (const auto& v : schema.at("enum")) hit = hit || v == value;
    INFO(where << ": enum mismatch, got " << value.dump());
    CHECK(hit);
  }
  if (schema.contains("type")) {
    const std::string t = schema.at("type").get<std::string>();
    INFO(where << ": expected type " << t << ", got " << value.dump());
    if (t == "object") REQUIRE(value.is_object());
    else if (t == "array") REQUIRE(value.is_array());
    else if (t == "string") REQUIRE(value.is_string());
    else if (t == "integer") REQUIRE(value.is_number_integer());
    else if (t == "number") REQUIRE(value.is_number());
    else if (t == "boolean") REQUIRE(value.is_boolean());
  }
  if (schema.contains("pattern") && value.is_string()) {
    const std::regex re(schema.at("pattern").get<std::string>());
    INFO(where << ": pattern mismatch on " << value.dump());
    CHECK(std::regex_search(value.get<std::string>(), re));
  }
  if (value.is_object()) {
    if (schema.contains("required"))
      for (const auto& k : schema.at("required")) {
        INFO(where << ": missing required key " << k.get<std::string>());
        REQUIRE(value.contains(k.get<std::string>()));
      }
    if (schema.contains("properties"))
      for (const auto& [k, sub] : schema.at("properties").items())
        if (value.contains(k)) validate(sub, value.at(k), dir, where + "." + k);
    if (schema.contains("additionalProperties") &&
        schema.at("additionalProperties").is_object()) {
      const json listed = schema.value("properties", json::object());
      for (const auto& [k, v] : value.items())
        if (!listed.contains(k))
          validate(schema.at("additionalProperties"), v, dir, where + "." + k);
    }
  }
  if (value.is_array() && schema.contains("items")) {
    size_t i = 0;
    for (const auto& v : value)
      validate(schema.at("items"), v, dir, where + "[" + std::to_string(i++) + "]");
  }
}

void check_schema(const std::string& schema_file, const json& value) {
  validate(load_json_file(docs() + "/" + schema_file), value, docs(), schema_file);
}

}  // namespace

TEST_CASE("fp emits the documented density report") {
  const RunResult r = run("fp --n 1 --symbol '1/|xi|^1' --format json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.output);
  check_schema("density_report.schema.json", j);
  CHECK(j.at("tr_x").at("kind") == "exact");
  CHECK(j.at("tr_x").at("rational") == "1/2");
  CHECK(j.at("tr_x").at("pi_power") == -1);
  CHECK(j.at("res_x").at("rational") == "1");

  const RunResult csv = run("fp --n 1 --symbol '1/|xi|^1' --format csv");
  REQUIRE(csv.code == 0);
  CHECK(csv.output.rfind("degree,branch,K,value,error_bound\n", 0) == 0);

  const RunResult pretty = run("fp --n 1 --symbol '1/|xi|^1'");
  REQUIRE(pretty.code == 0);
  CHECK(pretty.output.find("1/2") != std::string::npos);
}

TEST_CASE("res and matrix symbols") {
  const RunResult r =
      run("res --n 2 --symbol 'xi1^2/|xi|^4' --format json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.output);
  check_schema("density_report.schema.json", j);
  CHECK(j.at("res_x").at("rational") == "1/4");

  const RunResult m =
      run("fp --n 1 --M 2 --symbol 'diag(1/|xi|^1, xi1^2/|xi|^4)' --format json");
  REQUIRE(m.code == 0);
  check_schema("density_report.schema.json", json::parse(m.output));
}

TEST_CASE("logsym adds the log-weight density") {
  const RunResult r = run(
      "logsym --n 1 --symbol '1/|xi|^1' --p '4*xi1^2; 1' --J 8 --format json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.output);
  check_schema("density_report.schema.json", j);
  REQUIRE(j.contains("res_x0_log"));
  CHECK(j.at("res_x0_log").at("kind") == "numeric");
}

TEST_CASE("expand emits expansion plus zeta poles") {
  const RunResult r =
      run("expand --n 1 --symbol '1/|xi|^1' --m 2 --N 1 --format json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.output);
  REQUIRE(j.contains("expansion"));
  REQUIRE(j.contains("zeta_poles"));
  check_schema("expansion.schema.json", j.at("expansion"));
  check_schema("zeta_poles.schema.json", j.at("zeta_poles"));
  CHECK(j.at("expansion").at("rows").at(0).at("exponent") == "-1");
  CHECK(j.at("zeta_poles").at("poles").contains("0"));
}

TEST_CASE("expand refuses a weight order at or below the symbol order plus n") {
  const RunResult r = run("expand --n 1 --symbol 'xi1^2' --m 2");
  CHECK(r.code == 1);
  CHECK(r.output.find("error") != std::string::npos);
}

TEST_CASE("usage and parse errors exit with 2 and show the grammar") {
  CHECK(run("fp --n 1").code == 2);                  // missing --symbol
  CHECK(run("fp --n 1 --symbol '1' --bogus").code == 2);
  CHECK(run("").code == 2);                          // missing subcommand

  const RunResult bad = run("fp --n 1 --symbol 'xi1^'");
  CHECK(bad.code == 2);
  CHECK(bad.output.find("position") != std::string::npos);
  CHECK(bad.output.find("term") != std::string::npos);  // grammar excerpt
}

TEST_CASE("c0 reports the constant coefficient") {
  const RunResult r =
      run("c0 --n 1 --symbol '1/|xi|^1' --p 'xi1^2; 1' --format json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.output);
  CHECK(j.at("value").at("kind") == "exact");
  CHECK(j.at("value").at("rational") == "1/2");
  CHECK(j.at("value").at("pi_power") == -1);
}

TEST_CASE("defect reports both routes") {
  const RunResult r = run(
      "defect --n 1 --symbol '1/|xi|^1' --p 'xi1^2; 1' --p2 '4*xi1^2; 1' "
      "--N 1 --format json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.output);
  REQUIRE(j.contains("trace_defect"));
  REQUIRE(j.contains("difference_coefficient"));
  const double td = j.at("trace_defect").at("decimal").get<double>();
  const double dc = j.at("difference_coefficient").at("decimal").get<double>();
  CHECK(std::abs(std::abs(td) - 0.2206356001526516) < 1e-9);
  CHECK(std::abs(td - dc) < 1e-10);
}

TEST_CASE("fit recovers the ladder against the default weight") {
  const RunResult r =
      run("fit --n 1 --symbol '1' --m 2 --N 1 --t0 64 --rho 4 --format json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.output);
  check_schema("fit_report.schema.json", j);
  CHECK(j.at("ok") == true);
  // only the leading slot lies inside the N = 1 trusted window
  const auto& front = j.at("rows").at(0);
  CHECK(front.at("exponent") == "-1/2");
  REQUIRE(front.contains("symbolic"));
  CHECK(front.at("verdict") == "ok");
  CHECK(front.at("rel_error").get<double>() < 1e-6);
}

TEST_CASE("verify filters and corruption hooks") {
  const RunResult r = run("verify --only alpha --format json");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.output);
  check_schema("verify_report.schema.json", j);
  CHECK(j.at("all_pass") == true);
  REQUIRE(j.at("criteria").size() == 1);
  CHECK(j.at("criteria").at(0).at("name") == "alpha-harmonic-correction");

  CHECK(run("verify --only alpha --corrupt-alpha").code == 1);
  CHECK(run("verify --only no-such-criterion").code == 1);
}

TEST_CASE("reports can be written to a file") {
  const std::string path = "/tmp/symtrace_blackbox_out.json";
  std::remove(path.c_str());
  const RunResult r = run("fp --n 1 --symbol '1/|xi|^1' --format json --out " + path);
  REQUIRE(r.code == 0);
  const json j = load_json_file(path);
  CHECK(j.at("tr_x").at("rational") == "1/2");
  std::remove(path.c_str());
}

TEST_CASE("config file supplies defaults, flags override") {
  const std::string cfg = "/tmp/symtrace_blackbox_cfg.toml";
  {
    std::ofstream f(cfg);
    f << "[fp]\n"
      << "n=1\n"
      << "symbol=\"1/|xi|^1\"\n"
      << "format=\"json\"\n";
  }
  const RunResult r = run("--config " + cfg + " fp");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.output).at("tr_x").at("rational") == "1/2");

  const RunResult over = run("--config " + cfg + " fp --format csv");
  REQUIRE(over.code == 0);
  CHECK(over.output.rfind("degree,branch,K,value,error_bound\n", 0) == 0);
  std::remove(cfg.c_str());
}

TEST_CASE("precision can come from the environment") {
  const std::string cmd = "SYMTRACE_PRECISION=30 " + bin() +
                          " fp --n 1 --symbol '1/|xi|^1' --format json 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(json::parse(out).at("tr_x").at("rational") == "1/2");
}
