#pragma once

#include <stdexcept>
#include <string>

namespace bsg {

enum class ErrorCode {
  InvalidArgument,
  NotUnit,
  NotPrime,
  Divisibility,
  Parse,
  InvalidQuotient,
  RelationViolated,
  Precondition,
  Resource,
  BoundsExhausted,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Syntax error in a word, with the byte offset where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bsg
