#include "schubert/euler.hpp"

#include "schubert/error.hpp"
#include "schubert/parallel.hpp"

#include <algorithm>
#include <random>

namespace schubert {

namespace {

int sign(int d)
{
  return d % 2 == 0 ? 1 : -1;
}

void require_space(const FlagVariety& space, std::span<const Cell> cells)
{
  for (Cell c : cells)
    if (c.index >= space.num_cells())
      throw Error(ErrorKind::InvalidInput, "cell index out of range");
}

// Coefficients of x in the SSM basis. The lowest-degree part of s_nu is the
// single Schubert class sigma_{pd(nu)} with coefficient 1, so peeling off
// degrees from the bottom is triangular.
std::vector<Rational> expand_in_ssm_basis(const FlagVariety& space, CohClass x)
{
  std::vector<Rational> out(space.num_cells());
  while (auto low = x.lowest_degree()) {
    const CohClass part = x.graded_part(*low);
    for (Cell rho : space.cells()) {
      const Rational& coeff = part[rho];
      if (coeff == 0)
        continue;
      const Cell nu = space.pd_dual(rho);
      out[nu.index] += coeff;
      x -= space.ssm(nu) * coeff;
    }
    if (x.lowest_degree() && *x.lowest_degree() <= *low)
      throw Error(ErrorKind::ConsistencyFailure, "SSM expansion did not terminate");
  }
  return out;
}

// a^nu for every nu, both ways, checked against each other.
std::vector<std::int64_t> constants_for_pair(const FlagVariety& space, Cell lambda, Cell mu)
{
  const CohClass product = space.ssm(lambda) * space.ssm(mu);
  const std::vector<Rational> triangular = expand_in_ssm_basis(space, product);
  std::vector<std::int64_t> out(space.num_cells());
  for (Cell nuprime : space.cells()) {
    const Cell nu = space.opposite(nuprime);
    const Rational direct = space.pairing(product, space.csm(nuprime));
    if (direct != triangular[nu.index])
      throw Error(ErrorKind::ConsistencyFailure,
                  "structure constant routes disagree at (" + space.cell_word(lambda) + ", " +
                    space.cell_word(mu) + ", " + space.cell_word(nu) + ")");
    out[nu.index] = to_int64(direct, "structure constant");
  }
  return out;
}

Status classify(int d, std::int64_t chi, std::int64_t& signed_value)
{
  if (d < 0) {
    signed_value = 0;
    return chi == 0 ? Status::Empty : Status::Violation;
  }
  signed_value = sign(d) * chi;
  return signed_value >= 0 ? Status::Ok : Status::Violation;
}

template <class Entries>
std::size_t count_violations(const Entries& entries)
{
  return std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.status == Status::Violation; });
}

} // namespace

std::string_view to_string(Status s)
{
  switch (s) {
  case Status::Ok: return "ok";
  case Status::Violation: return "violation";
  case Status::Empty: return "empty";
  }
  return "?";
}

std::int64_t richardson_chi(const FlagVariety& space, Cell lambda, Cell nu)
{
  const Cell cells[] = {lambda, nu};
  require_space(space, cells);
  return to_int64(space.pairing(space.csm(lambda), space.ssm(space.opposite(nu))), "Richardson Euler characteristic");
}

std::vector<std::pair<Cell, std::int64_t>> structure_constants(const FlagVariety& space, Cell lambda, Cell mu)
{
  const Cell cells[] = {lambda, mu};
  require_space(space, cells);
  const auto all = constants_for_pair(space, lambda, mu);
  std::vector<std::pair<Cell, std::int64_t>> out;
  for (std::size_t k = 0; k < all.size(); ++k)
    if (all[k] != 0)
      out.emplace_back(Cell{static_cast<std::uint32_t>(k)}, all[k]);
  return out;
}

int expected_dim(const FlagVariety& space, std::span<const Cell> cells)
{
  if (cells.empty())
    throw Error(ErrorKind::InvalidInput, "expected_dim needs at least one cell");
  require_space(space, cells);
  int d = space.dim();
  for (Cell c : cells)
    d -= space.dim() - space.cell_dim(c);
  return d;
}

std::int64_t chi_multi_intersection(const FlagVariety& space, std::span<const Cell> cells)
{
  if (cells.empty())
    throw Error(ErrorKind::InvalidInput, "chi_multi_intersection needs at least one cell");
  require_space(space, cells);
  CohClass x = space.total_chern();
  for (std::size_t k = 0; k + 1 < cells.size(); ++k)
    x = x * space.ssm(cells[k]);
  return to_int64(space.pairing(x, space.ssm(cells.back())), "Euler characteristic");
}

TripleEntry signed_E(const FlagVariety& space, Cell lambda, Cell mu, Cell nuprime)
{
  const Cell cells[] = {lambda, mu, nuprime};
  TripleEntry e{lambda, mu, nuprime};
  e.d = expected_dim(space, cells);
  e.a = chi_multi_intersection(space, cells);
  e.status = classify(e.d, e.a, e.E);
  return e;
}

NfoldEntry signed_chi(const FlagVariety& space, std::span<const Cell> cells)
{
  NfoldEntry e;
  e.cells.assign(cells.begin(), cells.end());
  e.d = expected_dim(space, cells);
  e.chi = chi_multi_intersection(space, cells);
  e.status = classify(e.d, e.chi, e.signed_chi);
  return e;
}

std::size_t TripleReport::violations() const
{
  return count_violations(entries);
}

std::size_t NfoldReport::violations() const
{
  return count_violations(entries);
}

std::size_t OrthogonalityReport::violations() const
{
  std::size_t bad = 0;
  for (std::size_t i = 0; i < matrix.size(); ++i)
    for (std::size_t j = 0; j < matrix[i].size(); ++j)
      if (matrix[i][j] != (i == j ? 1 : 0))
        ++bad;
  return bad;
}

TripleReport verify_positivity(const FlagVariety& space, unsigned jobs)
{
  const std::size_t n = space.num_cells();
  space.table().materialize(jobs);
  space.total_chern();

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t mu = 0; mu < n; ++mu)
    for (std::uint32_t lambda = 0; lambda <= mu; ++lambda)
      pairs.emplace_back(lambda, mu);
  std::vector<std::vector<std::int64_t>> constants(pairs.size());
  parallel_for(pairs.size(), jobs, [&](std::size_t k) {
    constants[k] = constants_for_pair(space, Cell{pairs[k].first}, Cell{pairs[k].second});
  });

  TripleReport report;
  report.space = space.name();
  report.entries.reserve(n * n * n);
  for (std::uint32_t lambda = 0; lambda < n; ++lambda)
    for (std::uint32_t mu = 0; mu < n; ++mu) {
      const std::uint32_t lo = std::min(lambda, mu), hi = std::max(lambda, mu);
      const auto& a = constants[std::size_t(hi) * (hi + 1) / 2 + lo];
      for (Cell nuprime : space.cells()) {
        TripleEntry e{Cell{lambda}, Cell{mu}, nuprime};
        const Cell cells[] = {e.lambda, e.mu, nuprime};
        e.d = expected_dim(space, cells);
        e.a = a[space.opposite(nuprime).index];
        e.status = classify(e.d, e.a, e.E);
        report.entries.push_back(e);
      }
    }
  return report;
}

OrthogonalityReport verify_orthogonality(const FlagVariety& space, unsigned jobs)
{
  const std::size_t n = space.num_cells();
  space.table().materialize(jobs);
  space.total_chern();
  OrthogonalityReport report;
  report.space = space.name();
  report.matrix.assign(n, std::vector<std::int64_t>(n));
  parallel_for(n, jobs, [&](std::size_t lambda) {
    for (std::size_t nu = 0; nu < n; ++nu)
      report.matrix[lambda][nu] =
        richardson_chi(space, Cell{static_cast<std::uint32_t>(lambda)}, Cell{static_cast<std::uint32_t>(nu)});
  });
  return report;
}

NfoldReport verify_nfold_sign(const FlagVariety& space, int n, unsigned jobs, std::size_t budget,
                              std::uint64_t seed)
{
  if (n < 1)
    throw Error(ErrorKind::InvalidInput, "n must be at least 1");
  const std::size_t cells = space.num_cells();
  space.table().materialize(jobs);
  space.total_chern();

  NfoldReport report;
  report.space = space.name();
  report.n = n;

  auto finish = [&](std::vector<Cell> tuple, const Rational& chi_value) {
    NfoldEntry e;
    e.cells = std::move(tuple);
    e.d = expected_dim(space, e.cells);
    e.chi = to_int64(chi_value, "Euler characteristic");
    e.status = classify(e.d, e.chi, e.signed_chi);
    return e;
  };

  // Number of multisets, saturating at budget + 1.
  std::size_t count = 1;
  for (int k = 1; k <= n && count <= budget; ++k) {
    const double next = double(count) * double(cells + k - 1) / double(k);
    count = next > double(budget) ? budget + 1 : static_cast<std::size_t>(next + 0.5);
  }

  if (count <= budget) {
    // Depth-first over nondecreasing tuples, one task per first cell, with the
    // running product c(TX) s_{c1} ... s_{ck} carried down the recursion.
    std::vector<std::vector<NfoldEntry>> parts(cells);
    parallel_for(cells, jobs, [&](std::size_t first) {
      std::vector<Cell> tuple{Cell{static_cast<std::uint32_t>(first)}};
      auto dfs = [&](auto&& self, const CohClass& prefix) -> void {
        if (static_cast<int>(tuple.size()) == n) {
          parts[first].push_back(finish(tuple, space.integrate(prefix)));
          return;
        }
        for (std::uint32_t c = tuple.back().index; c < cells; ++c) {
          tuple.push_back(Cell{c});
          if (static_cast<int>(tuple.size()) == n)
            parts[first].push_back(finish(tuple, space.pairing(prefix, space.ssm(Cell{c}))));
          else
            self(self, prefix * space.ssm(Cell{c}));
          tuple.pop_back();
        }
      };
      const CohClass start = space.total_chern() * space.ssm(tuple.front());
      dfs(dfs, start);
    });
    for (auto& p : parts)
      for (auto& e : p)
        report.entries.push_back(std::move(e));
    return report;
  }

  report.exhaustive = false;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(cells - 1));
  std::vector<std::vector<Cell>> tuples(budget);
  for (auto& t : tuples) {
    t.resize(n);
    for (auto& c : t)
      c = Cell{pick(rng)};
    std::sort(t.begin(), t.end());
  }
  report.entries.resize(budget);
  parallel_for(budget, jobs, [&](std::size_t k) {
    const auto& t = tuples[k];
    CohClass x = space.total_chern();
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
      x = x * space.ssm(t[i]);
    report.entries[k] = finish(t, space.pairing(x, space.ssm(t.back())));
  });
  return report;
}

std::vector<std::pair<Cell, Cell>> check_two_fold_delta(const FlagVariety& space, unsigned jobs)
{
  const std::size_t n = space.num_cells();
  space.table().materialize(jobs);
  space.total_chern();
  std::vector<std::vector<std::pair<Cell, Cell>>> bad(n);
  parallel_for(n, jobs, [&](std::size_t l) {
    const Cell lambda{static_cast<std::uint32_t>(l)};
    const CohClass x = space.total_chern() * space.ssm(lambda);
    for (Cell mu : space.cells()) {
      const Rational chi = space.pairing(x, space.ssm(mu));
      const int want = space.opposite(mu) == lambda ? 1 : 0;
      if (chi != want)
        bad[l].emplace_back(lambda, mu);
    }
  });
  std::vector<std::pair<Cell, Cell>> out;
  for (auto& b : bad)
    out.insert(out.end(), b.begin(), b.end());
  return out;
}

} // namespace schubert
