#include "schubert/gkm.hpp"

#include "schubert/error.hpp"
#include "schubert/parallel.hpp"

#include <algorithm>
#include <map>

namespace schubert {

GkmClass::GkmClass(const WeylGroup& group, std::vector<RootPoly> values)
  : group_(&group), values_(std::move(values))
{
  if (values_.size() != group.size())
    throw Error(ErrorKind::InvalidInput, "GKM class needs one value per fixed point");
  for (const auto& p : values_)
    if (p.rank() != group.rank())
      throw Error(ErrorKind::RankMismatch);
}

std::optional<int> GkmClass::degree() const
{
  int deg = -1;
  for (const auto& p : values_) {
    if (p.is_zero())
      continue;
    if (!p.is_homogeneous())
      return std::nullopt;
    if (deg >= 0 && p.degree() != deg)
      return std::nullopt;
    deg = p.degree();
  }
  return deg < 0 ? 0 : 2 * deg;
}

void GkmClass::check(const GkmClass& o) const
{
  if (group_ != o.group_)
    throw Error(ErrorKind::GroupMismatch);
}

GkmClass& GkmClass::operator+=(const GkmClass& o)
{
  check(o);
  for (std::size_t w = 0; w < values_.size(); ++w)
    values_[w] += o.values_[w];
  return *this;
}

GkmClass& GkmClass::operator-=(const GkmClass& o)
{
  check(o);
  for (std::size_t w = 0; w < values_.size(); ++w)
    values_[w] -= o.values_[w];
  return *this;
}

GkmClass operator*(const GkmClass& a, const GkmClass& b)
{
  a.check(b);
  std::vector<RootPoly> out;
  out.reserve(a.values_.size());
  for (std::size_t w = 0; w < a.values_.size(); ++w)
    out.push_back(a.values_[w] * b.values_[w]);
  return GkmClass(*a.group_, std::move(out));
}

GkmClass operator*(const RootPoly& p, const GkmClass& a)
{
  std::vector<RootPoly> out;
  out.reserve(a.values_.size());
  for (const auto& v : a.values_)
    out.push_back(p * v);
  return GkmClass(*a.group_, std::move(out));
}

bool GkmClass::operator==(const GkmClass& o) const
{
  return group_ == o.group_ && values_ == o.values_;
}

// ---------------------------------------------------------------------------

GkmModel::GkmModel(std::shared_ptr<const WeylGroup> group) : group_(std::move(group))
{
  const WeylGroup& g = *group_;
  const RootSystem& rs = g.root_system();
  const int r = g.rank();
  const std::size_t n = g.size();

  images_.reserve(n * r);
  for (ElementId v = 0; v < n; ++v)
    for (int i = 0; i < r; ++i) {
      const std::int32_t s = g.act_on_root(v, i);
      RootPoly p = root_poly(rs.positive_roots()[std::abs(s) - 1]);
      images_.push_back(s > 0 ? std::move(p) : -p);
    }

  up_.resize(n);
  for (ElementId w = 0; w < n; ++w)
    for (ElementId v = w; v < n; ++v)
      if (g.leq(w, v))
        up_[w].push_back(v);

  sigma_.assign(n, zero());
  RootPoly top = RootPoly::constant(r, 1);
  for (const auto& beta : rs.positive_roots())
    top = top * root_poly(beta);
  {
    std::vector<RootPoly> values(n, RootPoly(r));
    values[g.longest()] = std::move(top);
    sigma_[g.longest()] = GkmClass(g, std::move(values));
  }

  for (std::size_t k = n - 1; k-- > 0;) {
    const auto w = static_cast<ElementId>(k);
    int ascent = 0;
    while (g.has_right_descent(w, ascent))
      ++ascent;
    try {
      sigma_[w] = divided_difference(ascent, sigma_[g.right(w, ascent)]);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotDivisible)
        throw Error(ErrorKind::GkmRecursionFailure, "at " + g.word_string(w));
      throw;
    }
  }

  for (const auto& p : sigma_[0].values())
    if (p != RootPoly::constant(r, 1))
      throw Error(ErrorKind::GkmRecursionFailure, "sigma_e is not the unit class");
}

GkmClass GkmModel::constant(const RootPoly& p) const
{
  return GkmClass(*group_, std::vector<RootPoly>(group_->size(), p));
}

GkmClass GkmModel::zero() const
{
  return GkmClass(*group_, std::vector<RootPoly>(group_->size(), RootPoly(rank())));
}

GkmClass GkmModel::divided_difference(int i, const GkmClass& c) const
{
  if (&c.group() != group_.get())
    throw Error(ErrorKind::GroupMismatch);
  if (i < 0 || i >= rank())
    throw Error(ErrorKind::InvalidInput, "simple reflection index out of range");
  const WeylGroup& g = *group_;
  std::vector<RootPoly> out(g.size(), RootPoly(rank()));
  for (ElementId v = 0; v < g.size(); ++v) {
    RootPoly num = c[v] - c[g.right(v, i)];
    if (num.is_zero())
      continue;
    out[v] = exact_divide(num, -root_image(v, i));
  }
  return GkmClass(g, std::move(out));
}

bool GkmModel::validate(const GkmClass& c) const
{
  if (&c.group() != group_.get())
    throw Error(ErrorKind::GroupMismatch);
  const WeylGroup& g = *group_;
  const auto& roots = g.root_system().positive_roots();
  for (ElementId v = 0; v < g.size(); ++v)
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const ElementId t = g.mul(g.reflection(static_cast<int>(k)), v);
      if (t < v)
        continue;
      RootPoly diff = c[v] - c[t];
      if (!diff.is_zero() && !diff.try_divide(root_poly(roots[k])))
        return false;
    }
  return true;
}

std::vector<RootPoly> GkmModel::expand(const GkmClass& c, std::optional<int> max_length) const
{
  if (&c.group() != group_.get())
    throw Error(ErrorKind::GroupMismatch);
  const WeylGroup& g = *group_;
  const int limit = max_length.value_or(g.length(g.longest()));
  std::vector<RootPoly> residual = c.values();
  std::vector<RootPoly> kappa(g.size(), RootPoly(rank()));
  // Ids are sorted by length, and sigma_x(y) = 0 unless x <= y, so the
  // residual at x only involves sigma_x once all shorter x are removed.
  for (ElementId x = 0; x < g.size(); ++x) {
    if (g.length(x) > limit)
      break;
    if (residual[x].is_zero())
      continue;
    auto q = residual[x].try_divide(sigma_[x][x]);
    if (!q)
      throw Error(ErrorKind::NotInSpan, "pivot at " + g.word_string(x));
    for (ElementId y : up_[x]) {
      if (y == x || g.length(y) > limit)
        continue;
      residual[y] -= *q * sigma_[x][y];
    }
    residual[x] = RootPoly(rank());
    kappa[x] = std::move(*q);
  }
  return kappa;
}

GkmClass GkmModel::combine(const std::vector<RootPoly>& kappa) const
{
  GkmClass out = zero();
  for (ElementId w = 0; w < kappa.size(); ++w)
    if (!kappa[w].is_zero())
      out += kappa[w] * sigma_[w];
  return out;
}

std::vector<std::pair<ElementId, Rational>> GkmModel::product_constants(ElementId u, ElementId v) const
{
  const WeylGroup& g = *group_;
  const int target = g.length(u) + g.length(v);
  std::vector<std::pair<ElementId, Rational>> out;
  if (target > g.length(g.longest()))
    return out;

  std::vector<RootPoly> residual(g.size(), RootPoly(rank()));
  for (ElementId x : up_[u]) {
    if (g.length(x) > target)
      continue;
    if (!sigma_[v][x].is_zero())
      residual[x] = sigma_[u][x] * sigma_[v][x];
  }
  for (ElementId x : up_[u]) {
    if (g.length(x) > target || residual[x].is_zero())
      continue;
    auto q = residual[x].try_divide(sigma_[x][x]);
    if (!q)
      throw Error(ErrorKind::NotInSpan, "pivot at " + g.word_string(x));
    if (g.length(x) == target) {
      if (q->degree() != 0)
        throw Error(ErrorKind::NotInSpan, "top coefficient is not constant");
      out.emplace_back(x, q->eval_zero());
      continue;
    }
    for (ElementId y : up_[x]) {
      if (y == x || g.length(y) > target)
        continue;
      residual[y] -= *q * sigma_[x][y];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const LieType> LieType::create(std::string_view label_or_matrix, std::size_t bound)
{
  return create(RootSystem::parse(label_or_matrix), bound);
}

std::shared_ptr<const LieType> LieType::create(RootSystem rs, std::size_t bound)
{
  auto rsp = std::make_shared<const RootSystem>(std::move(rs));
  return std::make_shared<const LieType>(std::make_shared<const WeylGroup>(rsp, bound));
}

const GkmModel& LieType::gkm() const
{
  std::call_once(gkm_once_, [this] { gkm_ = std::make_unique<GkmModel>(group_); });
  return *gkm_;
}

// ---------------------------------------------------------------------------

MultTable::MultTable(std::shared_ptr<const LieType> lie, std::shared_ptr<const ParabolicData> pd)
  : lie_(std::move(lie)), pd_(std::move(pd)), n_(pd_->num_cells())
{
  const std::size_t slots = n_ * (n_ + 1) / 2;
  once_ = std::make_unique<std::once_flag[]>(slots);
  rows_.resize(slots);
}

std::size_t MultTable::slot(std::size_t a, std::size_t b) const
{
  if (a >= n_ || b >= n_)
    throw Error(ErrorKind::InvalidInput, "cell index out of range");
  if (a > b)
    std::swap(a, b);
  return b * (b + 1) / 2 + a;
}

const MultTable::Row& MultTable::product(std::size_t a, std::size_t b) const
{
  const std::size_t s = slot(a, b);
  std::call_once(once_[s], [&] { rows_[s] = compute(a, b); });
  return rows_[s];
}

MultTable::Row MultTable::compute(std::size_t a, std::size_t b) const
{
  if (!lie_)
    throw Error(ErrorKind::InvalidInput, "table row missing and no engine to compute it");
  const auto& reps = pd_->min_reps();
  const auto constants = lie_->gkm().product_constants(reps[a], reps[b]);
  Row row;
  for (const auto& [w, c] : constants) {
    const auto local = pd_->local_index(w);
    if (!local) {
      if (c != 0)
        throw Error(ErrorKind::ParabolicClosureFailure,
                    lie_->group().word_string(reps[a]) + " * " + lie_->group().word_string(reps[b]));
      continue;
    }
    if (c != 0)
      row.emplace_back(static_cast<std::uint32_t>(*local), to_int64(c, "structure constant"));
  }
  std::sort(row.begin(), row.end());
  return row;
}

std::int64_t MultTable::constant(std::size_t a, std::size_t b, std::size_t c) const
{
  const Row& row = product(a, b);
  auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(static_cast<std::uint32_t>(c), INT64_MIN));
  if (it != row.end() && it->first == c)
    return it->second;
  return 0;
}

void MultTable::materialize(unsigned jobs) const
{
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t b = 0; b < n_; ++b)
    for (std::size_t a = 0; a <= b; ++a)
      pairs.emplace_back(a, b);
  parallel_for(pairs.size(), jobs, [&](std::size_t k) { product(pairs[k].first, pairs[k].second); });
}

void MultTable::preload(std::size_t a, std::size_t b, Row row)
{
  const std::size_t s = slot(a, b);
  std::sort(row.begin(), row.end());
  std::call_once(once_[s], [&] { rows_[s] = std::move(row); });
}

ChevalleyReport chevalley_check(const MultTable& table)
{
  ChevalleyReport report;
  const ParabolicData& pd = table.parabolic();
  const WeylGroup& g = pd.group();
  const RootSystem& rs = g.root_system();
  const auto& reps = pd.min_reps();

  for (int i = 0; i < g.rank(); ++i) {
    if (std::find(pd.subset().begin(), pd.subset().end(), i) != pd.subset().end())
      continue;
    const int si[] = {i};
    const std::size_t a = *pd.local_index(g.from_word(si));
    for (std::size_t b = 0; b < reps.size(); ++b) {
      const ElementId lambda = reps[b];
      std::map<std::uint32_t, std::int64_t> expected;
      for (std::size_t k = 0; k < rs.num_positive_roots(); ++k) {
        const ElementId x = g.mul(lambda, g.reflection(static_cast<int>(k)));
        if (g.length(x) != g.length(lambda) + 1)
          continue;
        const auto local = pd.local_index(x);
        if (!local)
          continue;
        const int coeff = rs.positive_coroots()[k][i];
        if (coeff != 0)
          expected[static_cast<std::uint32_t>(*local)] += coeff;
      }
      std::erase_if(expected, [](const auto& kv) { return kv.second == 0; });
      MultTable::Row want(expected.begin(), expected.end());
      const MultTable::Row& got = table.product(a, b);
      ++report.rows_checked;
      if (got != want)
        report.mismatches.push_back("s" + std::to_string(i + 1) + " * " + g.word_string(lambda));
    }
  }
  return report;
}

} // namespace schubert
