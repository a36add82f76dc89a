#pragma once

#include "piesp/number.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace piesp::cli {

enum class OutputFormat { table, json, csv };

/// Parses "table" | "json" | "csv"; throws Error otherwise.
OutputFormat format_from_name(const std::string& name);

/// Format to use when none was requested: a plain table on a terminal, JSON
/// when stdout is a pipe or file.
OutputFormat default_format();

/// Mode-annotated scalar: {"mode": ..., "value": ...} plus "digits" for the
/// decimal mode, values as strings so no reader re-rounds them.
nlohmann::json value_json(const NumberValue& value);
nlohmann::json value_json(const BigFloat& value, int digits);

/// The envelope every command emits:
/// {command, params, results, meta:{version, elapsed_seconds}}.
nlohmann::json envelope(const std::string& command, nlohmann::json params,
                        nlohmann::json results, double elapsed_seconds);

void print_json(const nlohmann::json& payload);

/// Column-aligned plain table; header may be empty for bare key/value lists.
void print_table(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows);

/// RFC-ish CSV: header always emitted, fields are known comma-free tokens.
void print_csv(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

}  // namespace piesp::cli
