#include "ecpoly/error.hpp"

namespace ecpoly {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::EdgeOutOfRange: return "EdgeOutOfRange";
    case ErrorKind::MalformedGraph6: return "MalformedGraph6";
    case ErrorKind::UnsupportedSize: return "UnsupportedSize";
    case ErrorKind::IntegerOverflow: return "IntegerOverflow";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::MalformedPolynomialJson: return "MalformedPolynomialJson";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::RecursionDepthExceeded: return "RecursionDepthExceeded";
    case ErrorKind::UnknownClaim: return "UnknownClaim";
  }
  return "Unknown";
}

}  // namespace ecpoly
