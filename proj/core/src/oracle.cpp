#include "schubert/oracle.hpp"

#include "schubert/error.hpp"
#include "schubert/euler.hpp"

#include <algorithm>
#include <numeric>

namespace schubert {

namespace {

std::int64_t binomial(int m, int s)
{
  std::int64_t b = 1;
  for (int k = 1; k <= s; ++k)
    b = b * (m - s + k) / k;
  return b;
}

} // namespace

std::int64_t proj_cell_chi(const ProjIntersectionSpec& spec)
{
  if (spec.dims.empty())
    throw Error(ErrorKind::InvalidInput, "no cells");
  for (int k : spec.dims)
    if (k < 0 || k > spec.n)
      throw Error(ErrorKind::InvalidInput, "cell dimension out of range");
  const int m = static_cast<int>(spec.dims.size());
  const int K = std::accumulate(spec.dims.begin(), spec.dims.end(), 0) - (m - 1) * spec.n;
  if (K < 0)
    return 0;
  std::int64_t chi = 0;
  for (int s = 0; s <= m; ++s)
    chi += (s % 2 ? -1 : 1) * binomial(m, s) * std::max(K - s + 1, 0);
  return chi;
}

std::shared_ptr<const FlagVariety> projective_space(int n)
{
  if (n < 1)
    throw Error(ErrorKind::InvalidInput, "n must be at least 1");
  std::vector<int> subset(n - 1);
  std::iota(subset.begin(), subset.end(), 1);
  return FlagVariety::create("A" + std::to_string(n), subset);
}

OracleReport proj_cross_check(int n, int max_cells)
{
  const auto space = projective_space(n);
  if (space->dim() != n || static_cast<int>(space->num_cells()) != n + 1)
    throw Error(ErrorKind::ConsistencyFailure, "A" + std::to_string(n) + " quotient is not P^n");
  std::vector<Cell> by_dim(n + 1);
  for (Cell c : space->cells())
    by_dim[space->cell_dim(c)] = c;

  OracleReport report;
  report.n = n;
  std::vector<int> dims;
  auto visit = [&](auto&& self, int from) -> void {
    if (!dims.empty()) {
      std::vector<Cell> cells;
      for (int k : dims)
        cells.push_back(by_dim[k]);
      const std::int64_t want = proj_cell_chi({n, dims});
      const std::int64_t got = chi_multi_intersection(*space, cells);
      ++report.checked;
      if (want != got)
        report.mismatches.push_back({dims, want, got});
    }
    if (static_cast<int>(dims.size()) == max_cells)
      return;
    for (int k = from; k <= n; ++k) {
      dims.push_back(k);
      self(self, k);
      dims.pop_back();
    }
  };
  visit(visit, 0);
  return report;
}

} // namespace schubert
