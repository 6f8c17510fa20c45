#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hks {

/// Base class for every failure the library reports. `code()` is a stable
/// machine-readable identifier; the CLI maps it into `{"error": ...}` JSON.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

/// A filtration block was given rank <= 0.
struct NonPositiveRank : Error {
  explicit NonPositiveRank(const std::string& what)
      : Error("NonPositiveRank", what) {}
};

/// Adjacent filtration blocks fail the strict slope decrease.
struct NonDecreasingSlopes : Error {
  explicit NonDecreasingSlopes(const std::string& what)
      : Error("NonDecreasingSlopes", what) {}
};

/// A class level lies outside 1..t for the companion filtration data.
struct LevelOutOfRange : Error {
  explicit LevelOutOfRange(const std::string& what)
      : Error("LevelOutOfRange", what) {}
};

/// Paired sequences have incompatible lengths.
struct LengthMismatch : Error {
  explicit LengthMismatch(const std::string& what)
      : Error("LengthMismatch", what) {}
};

/// Rank/degree bookkeeping between two filtrations does not match.
struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& what)
      : Error("ShapeMismatch", what) {}
};

/// A generator set does not cut out an (x,y)-primary proper ideal.
struct NotPrimary : Error {
  explicit NotPrimary(const std::string& what) : Error("NotPrimary", what) {}
};

/// The bracket-power self-check produced inconsistent ratios. Indicates an
/// implementation bug, never expected on valid input.
struct OracleInconsistency : Error {
  explicit OracleInconsistency(const std::string& what)
      : Error("OracleInconsistency", what) {}
};

/// Malformed textual/JSON input.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

/// A caller violated a documented precondition not covered by the codes above.
struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& what)
      : Error("InvalidArgument", what) {}
};

}  // namespace hks
