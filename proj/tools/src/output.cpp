#include "output.hpp"

#include <unistd.h>

#include <algorithm>
#include <iostream>

namespace piesp::cli {

OutputFormat format_from_name(const std::string& name) {
  if (name == "table") return OutputFormat::table;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw Error("unknown format '" + name + "' (expected table, json or csv)");
}

OutputFormat default_format() {
  return isatty(STDOUT_FILENO) ? OutputFormat::table : OutputFormat::json;
}

nlohmann::json value_json(const NumberValue& value) {
  nlohmann::json out{{"mode", kind_name(value.kind())}, {"value", value.str()}};
  if (value.kind() == NumberKind::decimal) out["digits"] = value.digits();
  return out;
}

nlohmann::json value_json(const BigFloat& value, int digits) {
  return {{"mode", "decimal"},
          {"value", format_bigfloat(value, digits)},
          {"digits", digits}};
}

nlohmann::json envelope(const std::string& command, nlohmann::json params,
                        nlohmann::json results, double elapsed_seconds) {
  return {{"command", command},
          {"params", std::move(params)},
          {"results", std::move(results)},
          {"meta", {{"version", "0.1.0"}, {"elapsed_seconds", elapsed_seconds}}}};
}

void print_json(const nlohmann::json& payload) {
  std::cout << payload.dump(2) << "\n";
}

void print_table(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  const std::size_t columns =
      std::max(header.size(),
               rows.empty() ? std::size_t{0} : rows.front().size());
  std::vector<std::size_t> widths(columns, 0);
  const auto widen_to = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < columns; ++i)
      widths[i] = std::max(widths[i], row[i].size());
  };
  if (!header.empty()) widen_to(header);
  for (const auto& row : rows) widen_to(row);

  const auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += row[i];
      if (i + 1 < row.size())
        line.append(widths[i] - std::min(widths[i], row[i].size()), ' ');
    }
    std::cout << line << "\n";
  };
  if (!header.empty()) {
    emit(header);
    std::string rule;
    for (std::size_t i = 0; i < columns; ++i) {
      if (i) rule += "  ";
      rule.append(widths[i], '-');
    }
    std::cout << rule << "\n";
  }
  for (const auto& row : rows) emit(row);
}

void print_csv(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  const auto emit = [](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += ",";
      line += row[i];
    }
    std::cout << line << "\n";
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

}  // namespace piesp::cli
