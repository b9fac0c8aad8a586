#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace wentzell::cli::detail {

using Json = nlohmann::ordered_json;

// 12 significant digits; empty for an absent value.
std::string num(double v);
std::string num(const std::optional<double>& v);

// Rounded to 12 significant digits; null when absent or not finite.
Json json_num(double v);
Json json_num(const std::optional<double>& v);

std::string csv_field(const std::string& s);
std::string csv_line(const std::vector<std::string>& fields);

// Throws ConfigError when the file could not be created later, so that bad paths
// are rejected before any computation.
void check_output_path(const std::string& path);

// Writes the report to `path`, or to `out` when the path is empty.
void emit(const std::string& text, const std::string& path, std::ostream& out);

}  // namespace wentzell::cli::detail
