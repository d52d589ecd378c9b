#ifndef SYMTRACE_REPORT_HPP
#define SYMTRACE_REPORT_HPP

#include <nlohmann/json.hpp>

#include <string>

#include "symtrace/densities.hpp"
#include "symtrace/expansion.hpp"
#include "symtrace/laurent.hpp"
#include "symtrace/oracle.hpp"

namespace symtrace {

// JSON emission; shapes match the schema files shipped under docs/.
nlohmann::json scalar_json(const ScalarValue& v);
nlohmann::json density_json(const DensityReport& r, ParityClass parity);
nlohmann::json expansion_json(const AsymptoticExpansion& e);
nlohmann::json zeta_json(const ZetaPoleData& z);
nlohmann::json fit_json(const FitReport& r);

// CSV emission, one row per report line, headers included.
std::string density_csv(const DensityReport& r);
std::string expansion_csv(const AsymptoticExpansion& e);
std::string zeta_csv(const ZetaPoleData& z);
std::string fit_csv(const FitReport& r);

// Terminal-friendly tables.
std::string density_pretty(const DensityReport& r, ParityClass parity);
std::string expansion_pretty(const AsymptoticExpansion& e);
std::string zeta_pretty(const ZetaPoleData& z);
std::string fit_pretty(const FitReport& r);

}  // namespace symtrace

#endif
