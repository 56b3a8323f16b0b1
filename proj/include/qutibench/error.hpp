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

#ifndef QUTIBENCH_ERROR_HPP_
#define QUTIBENCH_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace qutibench {

// Raised for malformed user input (topology, catalog, measurement files).
// `line` is 1-based; 0 means the error is not tied to a specific line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Raised when an operation is called with arguments that violate its
// precondition (e.g. batch = 0, empty record subset).
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace qutibench

#endif  // QUTIBENCH_ERROR_HPP_
