/* Copyright 2026 The QuTiBench Toolkit Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef QUTIBENCH_CSV_HPP_
#define QUTIBENCH_CSV_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qutibench::csv {

// Splits one comma-separated line. No quoting; fields are trimmed of
// surrounding whitespace. Empty fields are preserved.
std::vector<std::string> split_line(std::string_view line);

// Splits text into lines, dropping a trailing '\r' on each.
std::vector<std::string> split_lines(std::string_view text);

// Field parsers. Return nullopt for an empty field; throw ParseError (with
// the given line number) for a malformed one.
std::optional<double> parse_double(std::string_view field, int line,
                                   std::string_view what);
std::optional<std::int64_t> parse_int(std::string_view field, int line,
                                      std::string_view what);

// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

}  // namespace qutibench::csv

#endif  // QUTIBENCH_CSV_HPP_
