#pragma once

#include <stdexcept>
#include <string>

namespace repkit {

struct AmbientMismatch : std::runtime_error {
  explicit AmbientMismatch(const std::string& m) : std::runtime_error(m) {}
};

struct NonAdmissible : std::runtime_error {
  explicit NonAdmissible(const std::string& m) : std::runtime_error(m) {}
};

struct CocycleMismatch : std::runtime_error {
  explicit CocycleMismatch(const std::string& m) : std::runtime_error(m) {}
};

struct NotAlmostSplit : std::runtime_error {
  explicit NotAlmostSplit(const std::string& m) : std::runtime_error(m) {}
};

struct EnumerationBound : std::runtime_error {
  explicit EnumerationBound(const std::string& m) : std::runtime_error(m) {}
};

struct EmptyLevelWithRemainder : std::runtime_error {
  explicit EmptyLevelWithRemainder(const std::string& m) : std::runtime_error(m) {}
};

struct CoverFailure : std::runtime_error {
  explicit CoverFailure(const std::string& m) : std::runtime_error(m) {}
};

struct NonVanishingSelfExt : std::runtime_error {
  explicit NonVanishingSelfExt(const std::string& m) : std::runtime_error(m) {}
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& m) : std::runtime_error(m) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

// Raised when an internal cross-check fails (two independent routes disagree).
struct InternalInconsistency : std::logic_error {
  explicit InternalInconsistency(const std::string& m) : std::logic_error(m) {}
};

} // namespace repkit
