#include "schubert/weyl.hpp"

#include "schubert/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace schubert {

namespace {

constexpr std::size_t kMaxPositiveRoots = 4096;

using Matrix = std::vector<std::vector<int>>;

Matrix chain(int n)
{
  Matrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n)
      a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

Matrix named_cartan(char type, int n)
{
  switch (type) {
  case 'A':
    if (n >= 1)
      return chain(n);
    break;
  case 'B':
    if (n >= 2) {
      auto a = chain(n);
      a[n - 2][n - 1] = -1;
      a[n - 1][n - 2] = -2;
      return a;
    }
    break;
  case 'C':
    if (n >= 2) {
      auto a = chain(n);
      a[n - 2][n - 1] = -2;
      a[n - 1][n - 2] = -1;
      return a;
    }
    break;
  case 'D':
    if (n >= 3) {
      auto a = chain(n);
      a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
      a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
      return a;
    }
    break;
  case 'E':
    if (n >= 6 && n <= 8) {
      // Bourbaki: 1-3-4-5-...-n with 2 attached to 4.
      Matrix a(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i)
        a[i][i] = 2;
      auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
      link(1, 3);
      link(2, 4);
      for (int i = 3; i < n; ++i)
        link(i, i + 1);
      return a;
    }
    break;
  case 'F':
    if (n == 4) {
      auto a = chain(4);
      a[1][2] = -1;
      a[2][1] = -2;
      return a;
    }
    break;
  case 'G':
    if (n == 2)
      return {{2, -3}, {-1, 2}};
    break;
  default:
    break;
  }
  throw Error(ErrorKind::UnknownType, std::string(1, type) + std::to_string(n));
}

int height(const Root& r)
{
  return std::accumulate(r.begin(), r.end(), 0);
}

} // namespace

RootSystem RootSystem::from_label(std::string_view label)
{
  std::string s(label);
  if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
    throw Error(ErrorKind::UnknownType, s);
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw Error(ErrorKind::UnknownType, s);
  if (s.size() > 4)
    throw Error(ErrorKind::UnknownType, s);
  const char type = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  const int n = std::stoi(s.substr(1));
  auto a = named_cartan(type, n);
  return from_cartan(std::move(a), std::string(1, type) + std::to_string(n));
}

RootSystem RootSystem::from_cartan(std::vector<std::vector<int>> cartan, std::string label)
{
  const int n = static_cast<int>(cartan.size());
  if (n == 0)
    throw Error(ErrorKind::NotFiniteType, "empty Cartan matrix");
  if (n > 16)
    throw Error(ErrorKind::InvalidInput, "rank above 16 is not supported");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(cartan[i].size()) != n)
      throw Error(ErrorKind::NotFiniteType, "Cartan matrix is not square");
    for (int j = 0; j < n; ++j) {
      if (i == j && cartan[i][j] != 2)
        throw Error(ErrorKind::NotFiniteType, "diagonal entries must be 2");
      if (i != j && cartan[i][j] > 0)
        throw Error(ErrorKind::NotFiniteType, "off-diagonal entries must be <= 0");
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        throw Error(ErrorKind::NotFiniteType, "zero pattern is not symmetric");

  RootSystem rs;
  rs.label_ = std::move(label);
  rs.rank_ = n;
  rs.cartan_ = std::move(cartan);
  rs.enumerate_roots();
  return rs;
}

RootSystem RootSystem::parse(std::string_view label_or_matrix)
{
  std::string s(label_or_matrix);
  const auto first = s.find_first_not_of(" \t\n");
  if (first != std::string::npos && s[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(s);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::UnknownType, std::string("malformed Cartan matrix: ") + e.what());
    }
    std::vector<std::vector<int>> m;
    if (!j.is_array())
      throw Error(ErrorKind::UnknownType, "Cartan matrix must be an array of rows");
    for (const auto& row : j) {
      if (!row.is_array())
        throw Error(ErrorKind::UnknownType, "Cartan matrix must be an array of rows");
      std::vector<int> r;
      for (const auto& x : row) {
        if (!x.is_number_integer())
          throw Error(ErrorKind::UnknownType, "Cartan entries must be integers");
        r.push_back(x.get<int>());
      }
      m.push_back(std::move(r));
    }
    return from_cartan(std::move(m), "custom");
  }
  return from_label(s);
}

void RootSystem::enumerate_roots()
{
  const int n = rank_;
  std::vector<Root> roots;
  std::vector<Root> coroots;
  std::map<Root, std::size_t> seen;
  for (int i = 0; i < n; ++i) {
    Root e(n, 0);
    e[i] = 1;
    seen.emplace(e, roots.size());
    roots.push_back(e);
    coroots.push_back(e);
  }
  for (std::size_t idx = 0; idx < roots.size(); ++idx) {
    for (int i = 0; i < n; ++i) {
      const Root beta = roots[idx];
      if (beta == roots[i])
        continue;
      Root gamma = reflect(i, beta);
      if (std::any_of(gamma.begin(), gamma.end(), [](int c) { return c < 0; }))
        throw Error(ErrorKind::NotFiniteType, "reflection leaves the positive cone");
      // s_i on coroots: g - <g, alpha_i> alpha_i^vee, <g, alpha_i> = sum_k g_k a_ki
      Root co = coroots[idx];
      int pairing = 0;
      for (int k = 0; k < n; ++k)
        pairing += co[k] * cartan_[k][i];
      co[i] -= pairing;

      auto it = seen.find(gamma);
      if (it != seen.end()) {
        if (coroots[it->second] != co)
          throw Error(ErrorKind::NotFiniteType, "inconsistent coroots");
        continue;
      }
      if (roots.size() >= kMaxPositiveRoots)
        throw Error(ErrorKind::NotFiniteType, "positive roots do not terminate");
      seen.emplace(gamma, roots.size());
      roots.push_back(std::move(gamma));
      coroots.push_back(std::move(co));
    }
  }

  std::vector<std::size_t> order(roots.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int ha = height(roots[a]);
    const int hb = height(roots[b]);
    if (ha != hb)
      return ha < hb;
    return roots[a] > roots[b];
  });
  roots_.clear();
  coroots_.clear();
  for (auto k : order) {
    roots_.push_back(roots[k]);
    coroots_.push_back(coroots[k]);
  }

  simple_action_.assign(n, std::vector<int>(roots_.size(), 0));
  for (int i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < roots_.size(); ++k) {
      if (static_cast<int>(k) == i) {
        simple_action_[i][k] = -(i + 1);
        continue;
      }
      const int m = root_index(reflect(i, roots_[k]));
      simple_action_[i][k] = m + 1;
    }
  }
}

int RootSystem::root_index(const Root& r) const
{
  auto it = std::lower_bound(roots_.begin(), roots_.end(), r, [](const Root& a, const Root& b) {
    const int ha = height(a);
    const int hb = height(b);
    if (ha != hb)
      return ha < hb;
    return a > b;
  });
  if (it == roots_.end() || *it != r)
    return -1;
  return static_cast<int>(it - roots_.begin());
}

int RootSystem::coroot_pairing(int i, const Root& beta) const
{
  int s = 0;
  for (int j = 0; j < rank_; ++j)
    s += cartan_[i][j] * beta[j];
  return s;
}

Root RootSystem::reflect(int i, const Root& beta) const
{
  Root out = beta;
  out[i] -= coroot_pairing(i, beta);
  return out;
}

std::vector<std::vector<Rational>> RootSystem::fundamental_weight_pairing() const
{
  std::vector<std::vector<Rational>> m(rank_, std::vector<Rational>(rank_));
  for (int j = 0; j < rank_; ++j)
    for (int i = 0; i < rank_; ++i)
      m[j][i] = cartan_[i][j];
  return m;
}

int RootSystem::braid_order(int i, int j) const
{
  if (i == j)
    return 1;
  switch (cartan_[i][j] * cartan_[j][i]) {
  case 0: return 2;
  case 1: return 3;
  case 2: return 4;
  case 3: return 6;
  default: throw Error(ErrorKind::NotFiniteType, "no finite braid order");
  }
}

// ---------------------------------------------------------------------------

int WeylElement::length() const
{
  return group->length(id);
}

const std::vector<int>& WeylElement::word() const
{
  return group->word(id);
}

std::span<const std::int32_t> WeylElement::root_action() const
{
  return group->root_action(id);
}

std::size_t WeylGroup::FingerprintHash::operator()(const std::vector<std::int32_t>& v) const noexcept
{
  std::uint64_t h = 1469598103934665603ull;
  for (auto x : v) {
    h ^= static_cast<std::uint32_t>(x);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

WeylGroup::WeylGroup(std::shared_ptr<const RootSystem> rs, std::size_t bound)
  : rs_(std::move(rs)), nroots_(rs_->num_positive_roots())
{
  const int r = rank();
  const std::size_t nr = nroots_;

  std::vector<std::int32_t> id_action(nr);
  for (std::size_t k = 0; k < nr; ++k)
    id_action[k] = static_cast<std::int32_t>(k + 1);
  actions_ = id_action;
  words_.push_back({});
  lengths_.push_back(0);
  index_.emplace(id_action, 0);

  // w s_i (beta_k) = w(s_i beta_k)
  auto times_simple = [&](ElementId w, int i) {
    std::vector<std::int32_t> out(nr);
    const std::int32_t* fp = actions_.data() + std::size_t(w) * nr;
    for (std::size_t k = 0; k < nr; ++k) {
      const int s = rs_->simple_reflection_action(i, static_cast<int>(k));
      const std::int32_t v = fp[std::abs(s) - 1];
      out[k] = s > 0 ? v : -v;
    }
    return out;
  };

  // Breadth-first by length; parents in order and ascending generators give
  // the lexicographically smallest reduced word on first discovery.
  std::size_t level_begin = 0;
  while (level_begin < words_.size()) {
    const std::size_t level_end = words_.size();
    for (std::size_t w = level_begin; w < level_end; ++w) {
      for (int i = 0; i < r; ++i) {
        if (actions_[w * nr + i] < 0)
          continue; // descent
        auto fp = times_simple(static_cast<ElementId>(w), i);
        if (index_.count(fp))
          continue;
        if (words_.size() >= bound)
          throw Error(ErrorKind::GroupTooLarge,
                      rs_->label() + " exceeds " + std::to_string(bound) + " elements");
        const auto id = static_cast<ElementId>(words_.size());
        auto word = words_[w];
        word.push_back(i);
        words_.push_back(std::move(word));
        lengths_.push_back(lengths_[w] + 1);
        actions_.insert(actions_.end(), fp.begin(), fp.end());
        index_.emplace(std::move(fp), id);
      }
    }
    level_begin = level_end;
  }

  const std::size_t n = words_.size();
  right_.resize(n * r);
  left_.resize(n * r);
  inverse_.resize(n);
  for (std::size_t w = 0; w < n; ++w) {
    const std::int32_t* fp = actions_.data() + w * nr;
    for (int i = 0; i < r; ++i) {
      right_[w * r + i] = index_.at(times_simple(static_cast<ElementId>(w), i));
      std::vector<std::int32_t> l(nr);
      for (std::size_t k = 0; k < nr; ++k) {
        const std::int32_t v = fp[k];
        const int s = rs_->simple_reflection_action(i, std::abs(v) - 1);
        l[k] = (v > 0) == (s > 0) ? std::abs(s) : -std::abs(s);
      }
      left_[w * r + i] = index_.at(l);
    }
    std::vector<std::int32_t> inv(nr);
    for (std::size_t k = 0; k < nr; ++k) {
      const std::int32_t v = fp[k];
      inv[std::abs(v) - 1] = v > 0 ? static_cast<std::int32_t>(k + 1) : -static_cast<std::int32_t>(k + 1);
    }
    inverse_[w] = index_.at(inv);
  }

  longest_ = static_cast<ElementId>(n - 1);
  if (static_cast<std::size_t>(lengths_[longest_]) != nr)
    throw Error(ErrorKind::NotFiniteType, "length of w0 differs from the number of positive roots");

  reflections_.assign(nr, 0);
  std::vector<bool> have(nr, false);
  std::size_t found = 0;
  for (std::size_t w = 0; w < n && found < nr; ++w) {
    for (int i = 0; i < r; ++i) {
      const std::int32_t v = actions_[w * nr + i];
      if (v < 0 || have[v - 1])
        continue;
      const auto wid = static_cast<ElementId>(w);
      reflections_[v - 1] = mul(right(wid, i), inv(wid));
      have[v - 1] = true;
      ++found;
    }
  }

  if (n <= kBruhatMatrixLimit) {
    const std::size_t words_per_row = (n + 63) / 64;
    bruhat_.assign(n, std::vector<std::uint64_t>(words_per_row, 0));
    bruhat_[0][0] = 1;
    for (std::size_t v = 1; v < n; ++v) {
      const int s = words_[v].back();
      const ElementId vs = right(static_cast<ElementId>(v), s);
      for (std::size_t u = 0; u < n; ++u) {
        const ElementId us = right(static_cast<ElementId>(u), s);
        const ElementId probe = lengths_[us] < lengths_[u] ? us : static_cast<ElementId>(u);
        if (bruhat_[vs][probe / 64] >> (probe % 64) & 1u)
          bruhat_[v][u / 64] |= std::uint64_t{1} << (u % 64);
      }
    }
  }
}

void WeylGroup::check(WeylElement e) const
{
  if (e.group != this)
    throw Error(ErrorKind::GroupMismatch);
}

WeylElement WeylGroup::element(ElementId id) const
{
  if (id >= size())
    throw Error(ErrorKind::InvalidInput, "element id out of range");
  return WeylElement{this, id};
}

WeylElement WeylGroup::multiply(WeylElement u, WeylElement v) const
{
  check(u);
  check(v);
  return WeylElement{this, mul(u.id, v.id)};
}

WeylElement WeylGroup::inverse(WeylElement w) const
{
  check(w);
  return WeylElement{this, inv(w.id)};
}

bool WeylGroup::bruhat_leq(WeylElement u, WeylElement v) const
{
  check(u);
  check(v);
  return leq(u.id, v.id);
}

ElementId WeylGroup::mul(ElementId u, ElementId v) const
{
  ElementId x = u;
  for (int letter : words_[v])
    x = right(x, letter);
  return x;
}

bool WeylGroup::leq(ElementId u, ElementId v) const
{
  if (!bruhat_.empty())
    return bruhat_[v][u / 64] >> (u % 64) & 1u;
  return leq_recursive(u, v);
}

bool WeylGroup::leq_recursive(ElementId u, ElementId v) const
{
  // For a right descent s of v: u <= v iff min(u, us) <= vs.
  while (true) {
    if (lengths_[u] > lengths_[v])
      return false;
    if (v == 0)
      return u == 0;
    const int s = words_[v].back();
    const ElementId us = right(u, s);
    if (lengths_[us] < lengths_[u])
      u = us;
    v = right(v, s);
  }
}

std::vector<int> WeylGroup::alternate_word(ElementId w) const
{
  std::vector<int> letters;
  while (w != 0) {
    int pick = -1;
    for (int i = rank() - 1; i >= 0; --i)
      if (has_right_descent(w, i)) {
        pick = i;
        break;
      }
    letters.push_back(pick);
    w = right(w, pick);
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

std::span<const std::int32_t> WeylGroup::root_action(ElementId w) const
{
  return {actions_.data() + std::size_t(w) * nroots_, nroots_};
}

Root WeylGroup::act(ElementId w, const Root& beta) const
{
  const int r = rank();
  Root out(r, 0);
  const auto fp = root_action(w);
  for (int j = 0; j < r; ++j) {
    if (beta[j] == 0)
      continue;
    const std::int32_t v = fp[j];
    const Root& img = rs_->positive_roots()[std::abs(v) - 1];
    const int c = v > 0 ? beta[j] : -beta[j];
    for (int k = 0; k < r; ++k)
      out[k] += c * img[k];
  }
  return out;
}

ElementId WeylGroup::from_word(std::span<const int> letters) const
{
  ElementId x = 0;
  for (int letter : letters) {
    if (letter < 0 || letter >= rank())
      throw Error(ErrorKind::InvalidInput, "simple reflection index out of range");
    x = right(x, letter);
  }
  return x;
}

std::string WeylGroup::word_string(ElementId w) const
{
  if (words_[w].empty())
    return "e";
  std::string s;
  for (int letter : words_[w]) {
    s += 's';
    s += std::to_string(letter + 1);
  }
  return s;
}

ElementId WeylGroup::parse(std::string_view text) const
{
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += c;
  if (s.empty() || s == "e")
    return 0;
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 's' && s[pos] != 'S')
      throw Error(ErrorKind::InvalidInput, "malformed word '" + std::string(text) + "'");
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos || pos - start > 3)
      throw Error(ErrorKind::InvalidInput, "malformed word '" + std::string(text) + "'");
    const int idx = std::stoi(s.substr(start, pos - start));
    if (idx < 1 || idx > rank())
      throw Error(ErrorKind::InvalidInput,
                  "s" + std::to_string(idx) + " out of range for rank " + std::to_string(rank()));
    letters.push_back(idx - 1);
  }
  return from_word(letters);
}

std::optional<ElementId> WeylGroup::find(std::span<const std::int32_t> fingerprint) const
{
  std::vector<std::int32_t> key(fingerprint.begin(), fingerprint.end());
  auto it = index_.find(key);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------

ParabolicData::ParabolicData(std::shared_ptr<const WeylGroup> group, std::vector<int> subset)
  : group_(std::move(group)), subset_(std::move(subset))
{
  const WeylGroup& g = *group_;
  std::sort(subset_.begin(), subset_.end());
  subset_.erase(std::unique(subset_.begin(), subset_.end()), subset_.end());
  for (int i : subset_)
    if (i < 0 || i >= g.rank())
      throw Error(ErrorKind::InvalidInput, "parabolic index " + std::to_string(i + 1) + " out of range");

  std::vector<bool> in_wp(g.size(), false);
  in_wp[0] = true;
  wp_.push_back(0);
  for (std::size_t k = 0; k < wp_.size(); ++k)
    for (int i : subset_) {
      const ElementId x = g.right(wp_[k], i);
      if (!in_wp[x]) {
        in_wp[x] = true;
        wp_.push_back(x);
      }
    }
  std::sort(wp_.begin(), wp_.end());

  local_.assign(g.size(), -1);
  for (ElementId w = 0; w < g.size(); ++w) {
    bool minimal = true;
    for (int i : subset_)
      if (g.has_right_descent(w, i)) {
        minimal = false;
        break;
      }
    if (minimal) {
      local_[w] = static_cast<int>(min_reps_.size());
      min_reps_.push_back(w);
    }
  }

  int wp_top = 0;
  for (ElementId u : wp_)
    wp_top = std::max(wp_top, g.length(u));
  dim_ = static_cast<int>(g.root_system().num_positive_roots()) - wp_top;
}

ElementId ParabolicData::coset_min_rep(ElementId w) const
{
  const WeylGroup& g = *group_;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : subset_)
      if (g.has_right_descent(w, i)) {
        w = g.right(w, i);
        changed = true;
      }
  }
  return w;
}

std::optional<std::size_t> ParabolicData::local_index(ElementId w) const
{
  if (local_[w] < 0)
    return std::nullopt;
  return static_cast<std::size_t>(local_[w]);
}

std::pair<ElementId, ElementId> ParabolicData::factor(ElementId w) const
{
  const ElementId lambda = coset_min_rep(w);
  return {lambda, group_->mul(group_->inv(lambda), w)};
}

} // namespace schubert
