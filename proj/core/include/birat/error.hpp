#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace birat {

enum class ErrorCode {
  kDivisionByZero,
  kNotPrime,
  kOutOfRange,
  kFieldMismatch,
  kZeroPolynomial,
  kAllZero,
  kAllZeroGenerators,
  kWrongArity,
  kConstantInput,
  kDegenerateImage,
  kSyntaxError,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::kSyntaxError, what), offset_(offset) {}

  // Byte offset into the parsed text where the problem was detected.
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace birat
