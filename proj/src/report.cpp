#include "symtrace/report.hpp"

#include <cstdio>
#include <sstream>

namespace symtrace {

namespace {

std::string dec(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

nlohmann::json scalar_json(const ScalarValue& v) {
  nlohmann::json j;
  if (v.is_exact()) {
    j["kind"] = "exact";
    j["rational"] = rat_str(v.rational());
    j["pi_power"] = v.pi_power();
  } else {
    j["kind"] = "numeric";
    j["error_bound"] = v.error_bound().to_double();
  }
  j["decimal"] = v.value().to_double();
  return j;
}

nlohmann::json density_json(const DensityReport& r, ParityClass parity) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"degree", rat_str(row.degree)},
                    {"branch", to_string(row.branch)},
                    {"K", row.K},
                    {"value", scalar_json(row.value)}});
  }
  nlohmann::json j{{"tr_x", scalar_json(r.tr_x)},
                   {"res_x", scalar_json(r.res_x)},
                   {"parity", to_string(parity)},
                   {"rows", rows}};
  if (r.res_x0_log) j["res_x0_log"] = scalar_json(*r.res_x0_log);
  return j;
}

nlohmann::json expansion_json(const AsymptoticExpansion& e) {
  nlohmann::json rows = nlohmann::json::array();
  for (auto it = e.rows().rbegin(); it != e.rows().rend(); ++it) {
    rows.push_back({{"exponent", rat_str(it->first.first)},
                    {"log_power", it->first.second},
                    {"value", scalar_json(it->second.value)},
                    {"branches", branch_names(it->second.branches)}});
  }
  return nlohmann::json{{"power", e.power()},
                        {"floor", rat_str(e.floor())},
                        {"rows", rows}};
}

nlohmann::json zeta_json(const ZetaPoleData& z) {
  nlohmann::json poles = nlohmann::json::object();
  for (const auto& p : z.poles) {
    nlohmann::json row{{"gz_order2", scalar_json(p.gz_order2)},
                       {"gz_order1", scalar_json(p.gz_order1)},
                       {"z_residue", scalar_json(p.z_residue)}};
    if (p.has_regular) row["z_regular"] = scalar_json(p.z_regular);
    poles[rat_str(p.location)] = row;
  }
  return nlohmann::json{{"N", z.N}, {"poles", poles}};
}

nlohmann::json fit_json(const FitReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    nlohmann::json entry{{"exponent", rat_str(row.exponent)},
                         {"log_power", row.log_power},
                         {"fitted", row.fitted},
                         {"verdict", row.verdict}};
    if (row.has_symbolic) {
      entry["symbolic"] = row.symbolic;
      entry["rel_error"] = row.rel_error;
    }
    rows.push_back(entry);
  }
  return nlohmann::json{{"ok", r.ok},
                        {"condition", r.condition},
                        {"residual", r.residual},
                        {"rows", rows}};
}

std::string density_csv(const DensityReport& r) {
  std::ostringstream out;
  out << "degree,branch,K,value,error_bound\n";
  for (const auto& row : r.rows)
    out << rat_str(row.degree) << ',' << to_string(row.branch) << ',' << row.K
        << ',' << dec(row.value.value().to_double()) << ','
        << dec(row.value.error_bound().to_double()) << '\n';
  return out.str();
}

std::string expansion_csv(const AsymptoticExpansion& e) {
  std::ostringstream out;
  out << "exponent,log_power,value,error_bound,branches\n";
  for (auto it = e.rows().rbegin(); it != e.rows().rend(); ++it)
    out << rat_str(it->first.first) << ',' << it->first.second << ','
        << dec(it->second.value.value().to_double()) << ','
        << dec(it->second.value.error_bound().to_double()) << ','
        << branch_names(it->second.branches) << '\n';
  return out.str();
}

std::string zeta_csv(const ZetaPoleData& z) {
  std::ostringstream out;
  out << "location,gz_order2,gz_order1,z_residue,z_regular\n";
  for (const auto& p : z.poles) {
    out << rat_str(p.location) << ','
        << dec(p.gz_order2.value().to_double()) << ','
        << dec(p.gz_order1.value().to_double()) << ','
        << dec(p.z_residue.value().to_double()) << ',';
    if (p.has_regular) out << dec(p.z_regular.value().to_double());
    out << '\n';
  }
  return out.str();
}

std::string fit_csv(const FitReport& r) {
  std::ostringstream out;
  out << "exponent,log_power,fitted,symbolic,rel_error,verdict\n";
  for (const auto& row : r.rows) {
    out << rat_str(row.exponent) << ',' << row.log_power << ','
        << dec(row.fitted) << ',';
    if (row.has_symbolic)
      out << dec(row.symbolic) << ',' << dec(row.rel_error);
    else
      out << ',';
    out << ',' << row.verdict << '\n';
  }
  return out.str();
}

std::string density_pretty(const DensityReport& r, ParityClass parity) {
  std::ostringstream out;
  out << "tr_x      = " << r.tr_x.to_string() << '\n';
  out << "res_x     = " << r.res_x.to_string() << '\n';
  if (r.res_x0_log)
    out << "res_x0    = " << r.res_x0_log->to_string() << '\n';
  out << "parity    = " << to_string(parity) << '\n';
  out << "terms:\n";
  for (const auto& row : r.rows)
    out << "  degree " << rat_str(row.degree) << "  K=" << row.K << "  ["
        << to_string(row.branch) << "]  " << row.value.to_string() << '\n';
  return out.str();
}

std::string expansion_pretty(const AsymptoticExpansion& e) {
  std::ostringstream out;
  out << "expansion in (-lambda), power N=" << e.power() << ", floor "
      << rat_str(e.floor()) << ":\n";
  for (auto it = e.rows().rbegin(); it != e.rows().rend(); ++it) {
    out << "  (-lambda)^(" << rat_str(it->first.first) << ")";
    if (it->first.second) out << " log^" << it->first.second << "(-lambda)";
    out << "  " << it->second.value.to_string() << "  ["
        << branch_names(it->second.branches) << "]\n";
  }
  return out.str();
}

std::string zeta_pretty(const ZetaPoleData& z) {
  std::ostringstream out;
  out << "zeta pole data, N=" << z.N << ":\n";
  for (const auto& p : z.poles) {
    out << "  s = " << rat_str(p.location)
        << ": (Gamma*zeta) order-2 " << p.gz_order2.to_string()
        << ", order-1 " << p.gz_order1.to_string() << "; zeta residue "
        << p.z_residue.to_string();
    if (p.has_regular) out << ", regular " << p.z_regular.to_string();
    out << '\n';
  }
  return out.str();
}

std::string fit_pretty(const FitReport& r) {
  std::ostringstream out;
  out << "fit " << (r.ok ? "ok" : "ILL-CONDITIONED") << ", condition "
      << dec(r.condition) << ", residual " << dec(r.residual) << ":\n";
  for (const auto& row : r.rows) {
    out << "  t^(" << rat_str(row.exponent) << ")";
    if (row.log_power) out << " log^" << row.log_power;
    out << "  fitted " << dec(row.fitted);
    if (row.has_symbolic)
      out << "  symbolic " << dec(row.symbolic) << "  rel "
          << dec(row.rel_error) << "  " << row.verdict;
    out << '\n';
  }
  return out.str();
}

}  // namespace symtrace
