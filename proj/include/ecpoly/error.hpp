#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecpoly {

enum class ErrorKind {
  LoopEdge,
  DuplicateEdge,
  VertexOutOfRange,
  EdgeOutOfRange,
  MalformedGraph6,
  UnsupportedSize,
  IntegerOverflow,
  ZeroPolynomial,
  MalformedPolynomialJson,
  BadParameters,
  SizeCapExceeded,
  RecursionDepthExceeded,
  UnknownClaim,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so the
// CLI can map it onto an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ecpoly
