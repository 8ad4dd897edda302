#pragma once

#include <stdexcept>
#include <string>

namespace ccc {

/// Malformed values or arguments that break an operation's contract.
struct invalid_input : std::runtime_error {
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid input that falls outside the supported range.
struct unsupported_parameters : std::runtime_error {
  explicit unsupported_parameters(const std::string& what) : std::runtime_error(what) {}
};

/// A backtracking search ran to completion without a hit.
struct search_exhausted : std::runtime_error {
  explicit search_exhausted(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ccc
