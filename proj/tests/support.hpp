#pragma once

// Independent reference implementations used as oracles by the tests. None of
// them touches the engine's signed-permutation machinery.

#include "schubert/classes.hpp"
#include "schubert/poly.hpp"
#include "schubert/weyl.hpp"

#include <algorithm>
#include <map>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<long>>;
using Cartan = std::vector<std::vector<int>>;

inline Matrix identity(int n)
{
  Matrix m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    m[i][i] = 1;
  return m;
}

// Column j is s_i(alpha_j) = alpha_j - a_ij alpha_i.
inline Matrix reflection_matrix(const Cartan& a, int i)
{
  Matrix m = identity(static_cast<int>(a.size()));
  for (std::size_t j = 0; j < a.size(); ++j)
    m[i][j] -= a[i][j];
  return m;
}

inline Matrix mat_mul(const Matrix& x, const Matrix& y)
{
  const std::size_t n = x.size();
  Matrix z(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        z[i][j] += x[i][k] * y[k][j];
  return z;
}

inline Matrix word_matrix(const Cartan& a, const std::vector<int>& word)
{
  Matrix m = identity(static_cast<int>(a.size()));
  for (int i : word)
    m = mat_mul(m, reflection_matrix(a, i));
  return m;
}

inline std::vector<long> apply(const Matrix& m, const std::vector<int>& v)
{
  std::vector<long> out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      out[i] += m[i][j] * v[j];
  return out;
}

inline bool is_negative(const std::vector<long>& v)
{
  return std::all_of(v.begin(), v.end(), [](long x) { return x <= 0; });
}

// Positive roots as the closure of the simple roots under simple reflections.
inline std::set<std::vector<int>> closure_positive_roots(const Cartan& a)
{
  const int n = static_cast<int>(a.size());
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    std::vector<int> r = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      int pairing = 0;
      for (int j = 0; j < n; ++j)
        pairing += a[i][j] * r[j];
      std::vector<int> s = r;
      s[i] -= pairing;
      if (std::any_of(s.begin(), s.end(), [](int x) { return x < 0; }))
        continue;
      if (roots.insert(s).second) {
        if (roots.size() > 10000)
          throw std::runtime_error("root closure does not terminate");
        queue.push_back(s);
      }
    }
  }
  return roots;
}

// |W| by breadth-first search over integer reflection matrices.
inline std::size_t matrix_group_order(const Cartan& a)
{
  const int n = static_cast<int>(a.size());
  std::set<Matrix> seen{identity(n)};
  std::vector<Matrix> frontier{identity(n)};
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const Matrix& m : frontier)
      for (int i = 0; i < n; ++i) {
        Matrix k = mat_mul(m, reflection_matrix(a, i));
        if (seen.insert(k).second)
          next.push_back(std::move(k));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

// Length as the number of positive roots sent to negative roots.
inline int inversion_count(const Cartan& a, const std::vector<int>& word)
{
  const Matrix m = word_matrix(a, word);
  int count = 0;
  for (const auto& r : closure_positive_roots(a))
    if (is_negative(apply(m, r)))
      ++count;
  return count;
}

// Subword property: u <= v iff u is the product of a subword of a reduced word of v.
inline bool subword_leq(const schubert::WeylGroup& g, schubert::ElementId u, schubert::ElementId v)
{
  const auto& word = g.word(v);
  const std::size_t len = word.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    std::vector<int> sub;
    for (std::size_t k = 0; k < len; ++k)
      if (mask >> k & 1)
        sub.push_back(word[k]);
    if (g.from_word(sub) == u)
      return true;
  }
  return false;
}

inline void reduced_words_rec(const schubert::WeylGroup& g, schubert::ElementId w, std::vector<int>& suffix,
                              std::vector<std::vector<int>>& out)
{
  if (w == 0) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (int i = 0; i < g.rank(); ++i)
    if (g.has_right_descent(w, i)) {
      suffix.push_back(i);
      reduced_words_rec(g, g.right(w, i), suffix, out);
      suffix.pop_back();
    }
}

inline std::vector<std::vector<int>> reduced_words(const schubert::WeylGroup& g, schubert::ElementId w)
{
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  reduced_words_rec(g, w, suffix, out);
  return out;
}

inline long binomial(int n, int k)
{
  if (k < 0 || k > n)
    return 0;
  long b = 1;
  for (int j = 1; j <= k; ++j)
    b = b * (n - k + j) / j;
  return b;
}

// Hand-rolled generators for the property tests.
inline schubert::Rational random_rational(std::mt19937_64& rng)
{
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  return schubert::make_rational(num(rng), den(rng));
}

inline schubert::RootPoly random_poly(int rank, std::mt19937_64& rng, int max_degree = 3, int max_terms = 5)
{
  std::uniform_int_distribution<int> terms(0, max_terms), deg(0, max_degree), var(0, rank - 1);
  std::vector<schubert::Term> ts;
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    std::vector<int> e(rank, 0);
    const int d = deg(rng);
    for (int k = 0; k < d; ++k)
      ++e[var(rng)];
    ts.push_back({schubert::Monomial::from_exponents(e), random_rational(rng)});
  }
  return schubert::RootPoly::from_terms(rank, ts);
}

inline schubert::CohClass random_class(const schubert::FlagVariety& space, std::mt19937_64& rng)
{
  std::uniform_int_distribution<int> keep(0, 2);
  schubert::CohClass x = space.zero();
  for (schubert::Cell c : space.cells())
    if (keep(rng) == 0)
      x[c] = random_rational(rng);
  return x;
}

} // namespace oracle
