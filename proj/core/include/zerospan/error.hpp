#ifndef ZEROSPAN_ERROR_HPP
#define ZEROSPAN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace zerospan {

// Machine-readable failure classes. The CLI maps these onto exit codes:
// input/precondition problems -> 1, mathematical non-applicability -> 2.
enum class Errc {
  FieldMismatch,
  BackendMismatch,
  ArityMismatch,
  ZeroPolynomial,
  ZeroDegree,
  ZeroVector,
  EmptyBasis,
  NoConvergence,
  StreamExhausted,
  DependentSeed,
  SeedNotInZeroSet,
  PointNotAZero,
  NoRealZero,
  RealFieldRejected,
  BudgetExhausted,
  DepthExceeded,
  UnknownKind,
  InvalidInput,
  ParseError,
  Internal,
};

const char* errc_name(Errc c);

// True for errors that indicate a mathematically impossible or exhausted
// construction rather than a malformed input.
bool errc_is_mathematical(Errc c);

class EngineError : public std::runtime_error {
public:
  EngineError(Errc code, std::string message, std::string detail_json = "{}")
      : std::runtime_error(std::move(message)), code_(code),
        detail_(std::move(detail_json)) {}

  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }
  // JSON object with structured diagnostics (slices probed, failing step, ...).
  const std::string& detail() const { return detail_; }

private:
  Errc code_;
  std::string detail_;
};

[[noreturn]] inline void raise(Errc code, std::string message,
                               std::string detail_json = "{}") {
  throw EngineError(code, std::move(message), std::move(detail_json));
}

} // namespace zerospan

#endif
