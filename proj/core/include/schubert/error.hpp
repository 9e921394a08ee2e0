#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schubert {

enum class ErrorKind {
  UnknownType,
  NotFiniteType,
  GroupTooLarge,
  GroupMismatch,
  RankMismatch,
  NotDivisible,
  GkmRecursionFailure,
  NotInSpan,
  ParabolicClosureFailure,
  GbOnly,
  NotInvertible,
  NotMinimalRepresentative,
  SpaceMismatch,
  NonIntegral,
  ConsistencyFailure,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind, so callers (the CLI in
/// particular) can tell input errors from internal consistency failures.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& detail = {});

  ErrorKind kind() const noexcept { return kind_; }

  /// True for errors caused by user-supplied data rather than by a broken
  /// invariant inside the engine.
  bool is_input_error() const noexcept;

private:
  ErrorKind kind_;
};

} // namespace schubert
