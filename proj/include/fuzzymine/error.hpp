#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fuzzymine {

enum class ErrorKind {
  InvalidCode,
  LevelOutOfRange,
  DuplicateCode,
  DuplicateName,
  MissingAncestor,
  UnknownCode,
  UnknownItem,
  DuplicateTransactionId,
  EmptyTransaction,
  MissingParentTable,
  ConfigError,
  UniverseTooLarge,
  ZeroAntecedentSupport,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `line` is the 1-based input line
/// when the error came from a loader.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> line_;
};

}  // namespace fuzzymine
