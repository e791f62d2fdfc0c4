#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ndsig {

enum class ErrorKind {
  SyntaxError,
  UnboundParameter,
  NegativeExponent,
  ZeroPolynomial,
  CompletionTooSmall,
  NotConvenient,
  DegenerateSupport,
  NonIsolated,
  NegativeMuMinus,
  NotAVertex,
  NotInteriorLatticePoint,
  AssumptionViolated,
  LemmaViolation,
  EmptyFindings,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is the stable category that
/// callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::size_t> position = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  /// Byte offset into the parsed text, for parser errors.
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

}  // namespace ndsig
