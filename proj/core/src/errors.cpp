#include "ndsig/errors.hpp"

namespace ndsig {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnboundParameter: return "UnboundParameter";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::CompletionTooSmall: return "CompletionTooSmall";
    case ErrorKind::NotConvenient: return "NotConvenient";
    case ErrorKind::DegenerateSupport: return "DegenerateSupport";
    case ErrorKind::NonIsolated: return "NonIsolated";
    case ErrorKind::NegativeMuMinus: return "NegativeMuMinus";
    case ErrorKind::NotAVertex: return "NotAVertex";
    case ErrorKind::NotInteriorLatticePoint: return "NotInteriorLatticePoint";
    case ErrorKind::AssumptionViolated: return "AssumptionViolated";
    case ErrorKind::LemmaViolation: return "LemmaViolation";
    case ErrorKind::EmptyFindings: return "EmptyFindings";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what,
             std::optional<std::size_t> position)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind),
      position_(position) {}

}  // namespace ndsig
