#pragma once

#include "schubert/classes.hpp"
#include "schubert/euler.hpp"
#include "schubert/oracle.hpp"

#include <string>
#include <vector>

namespace schubert::cli {

enum class Format { Json, Csv };

/// Every emitter lists cells in length-lexicographic order and writes exact
/// values: integers bare, other rationals as "num/den".
std::string emit_weyl(const WeylGroup& g, Format f);
std::string emit_table(const FlagVariety& space, Format f);
/// which = "csm" or "ssm"; an empty selection means every cell.
std::string emit_classes(const FlagVariety& space, const std::string& which, const std::vector<Cell>& cells, Format f);
std::string emit_chi(const FlagVariety& space, const NfoldEntry& entry, Format f);
std::string emit_constants(const FlagVariety& space, Cell lambda, Cell mu,
                           const std::vector<std::pair<Cell, std::int64_t>>& constants, Format f);
std::string emit_triples(const FlagVariety& space, const TripleReport& r, Format f);
std::string emit_orthogonality(const FlagVariety& space, const OrthogonalityReport& r, Format f);
std::string emit_nfold(const FlagVariety& space, const NfoldReport& r, Format f);
std::string emit_oracle(const OracleReport& r, Format f);

struct VerifySummary {
  OrthogonalityReport orthogonality;
  TripleReport positivity;
  NfoldReport nfold;
  std::vector<std::pair<Cell, Cell>> two_fold_failures;
  ChevalleyReport chevalley;
  std::size_t violations() const;
};

std::string emit_verify(const FlagVariety& space, const VerifySummary& s);

} // namespace schubert::cli
