#pragma once

#include <stdexcept>
#include <string>

namespace bht {

  // Raised when an operation's precondition fails on well-formed input
  // (mismatched spaces, class obstructions, unsatisfiable requests).
  class DomainError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Raised by the text readers; carries a 1-based line/column.
  class ParseError : public std::runtime_error {
   public:
    ParseError(std::string const& msg, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column "
                             + std::to_string(column) + ": " + msg),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line;
    std::size_t _column;
  };

}  // namespace bht
