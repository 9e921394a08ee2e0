#pragma once

#include "schubert/classes.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schubert {

/// chi(X_lambda ∩ X^nu) for the open cells: the integral of csm(lambda)
/// against the SSM class of the opposite cell of nu.
std::int64_t richardson_chi(const FlagVariety& space, Cell lambda, Cell nu);

/// Nonzero a^nu with s_lambda . s_mu = sum a^nu s_nu in the SSM basis, sorted by
/// nu. Computed twice (triangular expansion and triple integrals); throws
/// ConsistencyFailure if the two disagree.
std::vector<std::pair<Cell, std::int64_t>> structure_constants(const FlagVariety& space, Cell lambda, Cell mu);

/// dim X minus the sum of the codimensions; negative when the generic
/// intersection is empty.
int expected_dim(const FlagVariety& space, std::span<const Cell> cells);

/// chi of a generic intersection of translates of the given cells, as the
/// integral of c(TX) times the product of their SSM classes.
std::int64_t chi_multi_intersection(const FlagVariety& space, std::span<const Cell> cells);

enum class Status { Ok, Violation, Empty };
std::string_view to_string(Status s);

struct TripleEntry {
  Cell lambda, mu, nuprime;
  std::int64_t a = 0;
  int d = 0;
  std::int64_t E = 0;
  Status status = Status::Ok;
};

/// E = (-1)^d chi(X_lambda ∩ g X_mu ∩ h X_nu'), d the expected dimension; E := 0
/// when d < 0, and a nonzero chi there is a violation ("dimension contradiction").
TripleEntry signed_E(const FlagVariety& space, Cell lambda, Cell mu, Cell nuprime);

struct TripleReport {
  std::string space;
  std::vector<TripleEntry> entries;
  std::size_t violations() const;
};

struct OrthogonalityReport {
  std::string space;
  /// matrix[lambda][nu] = richardson_chi(lambda, nu).
  std::vector<std::vector<std::int64_t>> matrix;
  std::size_t violations() const;
};

struct NfoldEntry {
  std::vector<Cell> cells;
  int d = 0;
  std::int64_t chi = 0;
  std::int64_t signed_chi = 0;
  Status status = Status::Ok;
};

/// chi_multi_intersection with its expected dimension and sign check.
NfoldEntry signed_chi(const FlagVariety& space, std::span<const Cell> cells);

struct NfoldReport {
  std::string space;
  int n = 0;
  /// False when the tuples were sampled rather than enumerated.
  bool exhaustive = true;
  std::vector<NfoldEntry> entries;
  std::size_t violations() const;
};

/// All ordered triples (lambda, mu, nu'); also cross-checks both structure
/// constant routes on every pair.
TripleReport verify_positivity(const FlagVariety& space, unsigned jobs = 1);

OrthogonalityReport verify_orthogonality(const FlagVariety& space, unsigned jobs = 1);

/// Multisets of n cells (commutativity makes order irrelevant). When there are
/// more than `budget` of them, `budget` tuples are drawn with a fixed seed.
NfoldReport verify_nfold_sign(const FlagVariety& space, int n, unsigned jobs = 1,
                              std::size_t budget = 1'000'000, std::uint64_t seed = 1);

/// For n = 2 the generic intersection of two cells is an open Richardson
/// variety, so chi(lambda, mu) must be 1 if mu is the opposite of lambda and 0
/// otherwise. Returns the offending pairs.
std::vector<std::pair<Cell, Cell>> check_two_fold_delta(const FlagVariety& space, unsigned jobs = 1);

} // namespace schubert
