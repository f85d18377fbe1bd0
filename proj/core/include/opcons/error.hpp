/*
   Copyright 2026 The opcons Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef OPCONS_ERROR_HPP
#define OPCONS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace opcons {

/// Malformed operator source text. Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        detail_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

/// A symbolic constant was needed numerically but has no value in the binding.
class UnboundConstantError : public std::runtime_error {
 public:
  explicit UnboundConstantError(const std::string& name)
      : std::runtime_error("unbound symbolic constant '" + name + "'"), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// An argument outside the mathematical domain of an operation
/// (division by zero, case index out of range, no physical form, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace opcons

#endif  // OPCONS_ERROR_HPP
