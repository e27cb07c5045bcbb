// Exception type shared by every module of the library.

#ifndef ADEQUATE_ERROR_HPP_
#define ADEQUATE_ERROR_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <string_view>

namespace adequate {

  enum class ErrorKind {
    not_a_tree,
    no_trunk_path,
    dangling_endpoint,
    no_path,
    trunk_element_in_set,
    unpruned_operand,
    operation_not_in_signature,
    bound_exceeded,
    syntax_error,
    unknown_letter,
    not_pruned,
    not_sided,
    mode_error,
    format_error
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& message);
    // For parse failures; `position` is a byte offset (or line number for
    // line-oriented formats, see io.hpp).
    Error(ErrorKind kind, std::string const& message, std::size_t position);

    ErrorKind kind() const noexcept {
      return kind_;
    }

    bool has_position() const noexcept {
      return has_position_;
    }

    std::size_t position() const noexcept {
      return position_;
    }

   private:
    ErrorKind   kind_;
    std::size_t position_     = 0;
    bool        has_position_ = false;
  };

}  // namespace adequate

#endif  // ADEQUATE_ERROR_HPP_
