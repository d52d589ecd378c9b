#include "symtrace/expansion.hpp"

namespace symtrace {

std::string branch_names(unsigned mask) {
  std::string out;
  auto put = [&out](const char* name) {
    if (!out.empty()) out += "+";
    out += name;
  };
  if (mask & static_cast<unsigned>(ExpBranch::Master)) put("master_integral");
  if (mask & static_cast<unsigned>(ExpBranch::Log)) put("log_series");
  if (mask & static_cast<unsigned>(ExpBranch::Finite)) put("finite_part");
  if (out.empty()) out = "none";
  return out;
}

void AsymptoticExpansion::add(const Rat& exponent, unsigned log_power,
                              const ScalarValue& v, unsigned branches) {
  if (exponent < floor_) return;
  if (log_power > 0 &&
      (!rat_is_integer(exponent) || exponent > -Rat(static_cast<long>(N_))))
    fail(ErrorKind::Internal, "log row outside the -k-N exponent grid");
  Row& row = rows_[std::make_pair(exponent, log_power)];
  row.value += v;
  row.branches |= branches;
}

ScalarValue AsymptoticExpansion::coeff(const Rat& exponent,
                                       unsigned log_power) const {
  auto it = rows_.find(std::make_pair(exponent, log_power));
  return it == rows_.end() ? ScalarValue::zero() : it->second.value;
}

AsymptoticExpansion AsymptoticExpansion::scaled(const Rat& c) const {
  AsymptoticExpansion out(N_, floor_);
  for (const auto& [key, row] : rows_)
    out.add(key.first, key.second, row.value.mul_rat(c), row.branches);
  return out;
}

AsymptoticExpansion lambda_derivative(const AsymptoticExpansion& e) {
  AsymptoticExpansion out(e.power() + 1, e.floor() - 1);
  for (const auto& [key, row] : e.rows()) {
    const auto& [b, l] = key;
    out.add(b - 1, l, row.value.mul_rat(-b), row.branches);
    if (l >= 1)
      out.add(b - 1, l - 1, row.value.mul_rat(-Rat(static_cast<long>(l))),
              row.branches);
  }
  return out;
}

std::pair<ScalarValue, ScalarValue> coefficient_of_inverse_lambda(
    const AsymptoticExpansion& e) {
  Rat x = -Rat(static_cast<long>(e.power()));
  return {e.coeff(x, 1), e.coeff(x, 0)};
}

}  // namespace symtrace
