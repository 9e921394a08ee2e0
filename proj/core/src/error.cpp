#include "schubert/error.hpp"

namespace schubert {

std::string_view to_string(ErrorKind kind)
{
  switch (kind) {
  case ErrorKind::UnknownType: return "unknown type";
  case ErrorKind::NotFiniteType: return "not finite type";
  case ErrorKind::GroupTooLarge: return "group too large";
  case ErrorKind::GroupMismatch: return "group mismatch";
  case ErrorKind::RankMismatch: return "rank mismatch";
  case ErrorKind::NotDivisible: return "not divisible";
  case ErrorKind::GkmRecursionFailure: return "GKM recursion failure";
  case ErrorKind::NotInSpan: return "not in span";
  case ErrorKind::ParabolicClosureFailure: return "parabolic closure failure";
  case ErrorKind::GbOnly: return "G/B only";
  case ErrorKind::NotInvertible: return "not invertible";
  case ErrorKind::NotMinimalRepresentative: return "not a minimal representative";
  case ErrorKind::SpaceMismatch: return "space mismatch";
  case ErrorKind::NonIntegral: return "non-integral value";
  case ErrorKind::ConsistencyFailure: return "internal consistency failure";
  case ErrorKind::InvalidInput: return "invalid input";
  }
  return "error";
}

namespace {

std::string compose(ErrorKind kind, const std::string& detail)
{
  std::string msg(to_string(kind));
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}

} // namespace

Error::Error(ErrorKind kind, const std::string& detail)
  : std::runtime_error(compose(kind, detail)), kind_(kind)
{
}

bool Error::is_input_error() const noexcept
{
  switch (kind_) {
  case ErrorKind::UnknownType:
  case ErrorKind::NotFiniteType:
  case ErrorKind::GroupTooLarge:
  case ErrorKind::GroupMismatch:
  case ErrorKind::RankMismatch:
  case ErrorKind::GbOnly:
  case ErrorKind::NotMinimalRepresentative:
  case ErrorKind::SpaceMismatch:
  case ErrorKind::InvalidInput:
    return true;
  default:
    return false;
  }
}

} // namespace schubert
