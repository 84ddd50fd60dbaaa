#pragma once

#include <stdexcept>
#include <string>

namespace magnus {

/// Raised when an operation's mathematical precondition is violated
/// (genus mismatch, non-null-homologous twist word, uncertified multitwist, ...).
class precondition_error : public std::invalid_argument {
public:
  explicit precondition_error(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Raised on malformed word / twist-expression input. Carries the offset
/// of the offending character in the source string.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Raised when the cover-model window is too small to certify an oracle value.
class window_error : public std::runtime_error {
public:
  explicit window_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace magnus
