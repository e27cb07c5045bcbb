#include "adequate/error.hpp"

namespace adequate {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::not_a_tree:
        return "NotATree";
      case ErrorKind::no_trunk_path:
        return "NoTrunkPath";
      case ErrorKind::dangling_endpoint:
        return "DanglingEndpoint";
      case ErrorKind::no_path:
        return "NoPath";
      case ErrorKind::trunk_element_in_set:
        return "TrunkElementInS";
      case ErrorKind::unpruned_operand:
        return "UnprunedOperand";
      case ErrorKind::operation_not_in_signature:
        return "OperationNotInSignature";
      case ErrorKind::bound_exceeded:
        return "BoundExceeded";
      case ErrorKind::syntax_error:
        return "SyntaxError";
      case ErrorKind::unknown_letter:
        return "UnknownLetter";
      case ErrorKind::not_pruned:
        return "NotPruned";
      case ErrorKind::not_sided:
        return "NotSided";
      case ErrorKind::mode_error:
        return "ModeError";
      case ErrorKind::format_error:
        return "FormatError";
    }
    return "Unknown";
  }

  Error::Error(ErrorKind kind, std::string const& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  Error::Error(ErrorKind kind, std::string const& message, std::size_t position)
      : std::runtime_error(std::string(to_string(kind)) + " at position "
                           + std::to_string(position) + ": " + message),
        kind_(kind),
        position_(position),
        has_position_(true) {}

}  // namespace adequate
