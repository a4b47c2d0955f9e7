#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fracterm {

enum class ErrorKind {
  syntax,
  not_a_fracterm,
  not_simple,
  undefined,
  open_term,
  unsupported_operator,
  negative_into_nat,
  unsupported_shape,
  capacity,
  shape_mismatch,
  label_mismatch,
  unsupported_operation,
  invalid_instance,
  division_by_zero,
  unsupported_peripheral,
  strategy_inapplicable,
  dangling_reference,
  level_conflict,
};

/// Stable, user-facing name of an error kind ("SyntaxError", "OpenTerm", ...).
std::string_view to_string(ErrorKind kind);

/// Base for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(message), kind_(kind), position_(position) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Byte offset into the offending text, for syntax errors.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

}  // namespace fracterm
