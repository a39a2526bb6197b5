#include "fuzzymine/error.hpp"

namespace fuzzymine {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidCode: return "InvalidCode";
    case ErrorKind::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorKind::DuplicateCode: return "DuplicateCode";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::MissingAncestor: return "MissingAncestor";
    case ErrorKind::UnknownCode: return "UnknownCode";
    case ErrorKind::UnknownItem: return "UnknownItem";
    case ErrorKind::DuplicateTransactionId: return "DuplicateTransactionId";
    case ErrorKind::EmptyTransaction: return "EmptyTransaction";
    case ErrorKind::MissingParentTable: return "MissingParentTable";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::UniverseTooLarge: return "UniverseTooLarge";
    case ErrorKind::ZeroAntecedentSupport: return "ZeroAntecedentSupport";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorKind kind, const std::string& message,
                           std::optional<std::size_t> line) {
  std::string out(to_string(kind));
  if (line) out += " (line " + std::to_string(*line) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> line)
    : std::runtime_error(format_message(kind, message, line)),
      kind_(kind),
      line_(line) {}

}  // namespace fuzzymine
