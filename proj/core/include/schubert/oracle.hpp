#pragma once

#include "schubert/classes.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace schubert {

/// Cells of P^n given by their dimensions.
struct ProjIntersectionSpec {
  int n = 0;
  std::vector<int> dims;
};

/// Euler characteristic of a generic intersection of cells of P^n, by
/// inclusion-exclusion: the cell of dimension k is P^k minus a hyperplane, so
/// the intersection is a P^K minus m generic hyperplanes.
std::int64_t proj_cell_chi(const ProjIntersectionSpec& spec);

/// P^n as A_n / P with P generated by every simple root except the first.
std::shared_ptr<const FlagVariety> projective_space(int n);

struct OracleMismatch {
  std::vector<int> dims;
  std::int64_t oracle = 0;
  std::int64_t pipeline = 0;
};

struct OracleReport {
  int n = 0;
  std::size_t checked = 0;
  std::vector<OracleMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Compares proj_cell_chi with chi_multi_intersection on every multiset of at
/// most max_cells cells of P^n.
OracleReport proj_cross_check(int n, int max_cells = 4);

} // namespace schubert
