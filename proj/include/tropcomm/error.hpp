#pragma once

#include <stdexcept>
#include <string>

namespace tropcomm {

enum class ErrorKind {
  kDimension,     // shape or length mismatch
  kDomain,        // value outside the admitted domain (NaN, +inf, non-finite A)
  kDegenerate,    // all-bottom vector where a support is required
  kPrecondition,  // caller broke a documented precondition
  kParse,         // malformed text or JSON input
  kUnsupported,   // operation undefined for this case
  kAmbiguous,     // geometric query without a unique answer
  kIo,
};

/// Base exception for everything the library throws on bad input.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures carry the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::kParse,
              "at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace tropcomm
