#pragma once

#include <stdexcept>
#include <string>

namespace hilco {

struct NotCoprime : std::runtime_error {
  explicit NotCoprime(const std::string& m) : std::runtime_error(m) {}
};

struct NotMember : std::runtime_error {
  explicit NotMember(const std::string& m) : std::runtime_error(m) {}
};

struct ZeroModule : std::runtime_error {
  explicit ZeroModule(const std::string& m) : std::runtime_error(m) {}
};

struct NotContained : std::runtime_error {
  explicit NotContained(const std::string& m) : std::runtime_error(m) {}
};

struct PrecisionExhausted : std::runtime_error {
  explicit PrecisionExhausted(const std::string& m) : std::runtime_error(m) {}
};

struct NonStabilizing : std::runtime_error {
  explicit NonStabilizing(const std::string& m) : std::runtime_error(m) {}
};

struct SearchExhausted : std::runtime_error {
  explicit SearchExhausted(const std::string& m) : std::runtime_error(m) {}
};

struct ScanExhausted : std::runtime_error {
  explicit ScanExhausted(const std::string& m) : std::runtime_error(m) {}
};

struct MissingInvariant : std::runtime_error {
  explicit MissingInvariant(const std::string& m) : std::runtime_error(m) {}
};

/// A mathematically guaranteed relation failed: engine bug or a genuine
/// counterexample. Always surfaced loudly, never swallowed.
struct InvariantViolation : std::runtime_error {
  explicit InvariantViolation(const std::string& m) : std::runtime_error(m) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace hilco
