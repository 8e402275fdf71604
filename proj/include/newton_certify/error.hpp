#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace newton_certify {

/// Raised when an input violates the contract of a library operation.
/// Internal consistency failures use std::logic_error instead.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace newton_certify
