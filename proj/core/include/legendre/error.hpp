// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace legendre {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. `offset` is a byte offset into the source.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t offset, std::vector<std::string> expected = {})
      : Error(format(message, offset, expected)),
        message_(std::move(message)),
        offset_(offset),
        expected_(std::move(expected)) {}

  auto offset() const noexcept -> std::size_t { return offset_; }
  auto expected() const noexcept -> const std::vector<std::string>& { return expected_; }
  auto message() const noexcept -> const std::string& { return message_; }

 private:
  static auto format(const std::string& message, std::size_t offset,
                     const std::vector<std::string>& expected) -> std::string {
    std::string out = "parse error at offset " + std::to_string(offset) + ": " + message;
    if (!expected.empty()) {
      out += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i != 0) out += ", ";
        out += expected[i];
      }
      out += ")";
    }
    return out;
  }

  std::string message_;
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Evaluation outside the natural domain of an expression or map
/// (division by zero, log of a non-positive number, vertical tangent, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what, std::string subexpression = {})
      : Error(subexpression.empty() ? what : what + " in '" + subexpression + "'"),
        reason_(what),
        subexpression_(std::move(subexpression)) {}

  auto reason() const noexcept -> const std::string& { return reason_; }
  /// Printed form of the innermost offending subexpression, if known.
  auto subexpression() const noexcept -> const std::string& { return subexpression_; }

 private:
  std::string reason_;
  std::string subexpression_;
};

}  // namespace legendre
