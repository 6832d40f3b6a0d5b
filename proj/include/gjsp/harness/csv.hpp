#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gjsp {

// Plain comma-separated fields; no quoting (ids and tags never hold commas).
std::vector<std::string> split_csv_line(std::string_view line);
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

// %.12g, the precision every results/dataset file uses for reals.
std::string format_real(double value);
double parse_real(std::string_view field);          // ParseError
std::int64_t parse_integer(std::string_view field);  // ParseError

// Removes characters that would break a CSV field.
std::string csv_safe(std::string_view text);

}  // namespace gjsp
