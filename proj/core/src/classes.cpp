#include "schubert/classes.hpp"

#include "schubert/error.hpp"

#include <algorithm>
#include <map>

namespace schubert {

CohClass::CohClass(const FlagVariety& space, std::vector<Rational> coeffs)
  : space_(&space), coeffs_(std::move(coeffs))
{
  if (coeffs_.size() != space.num_cells())
    throw Error(ErrorKind::SpaceMismatch, "coefficient vector length differs from the number of cells");
}

bool CohClass::is_zero() const
{
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

bool CohClass::is_integral() const
{
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return is_integer(q); });
}

CohClass CohClass::graded_part(int k) const
{
  CohClass out = space_->zero();
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (space_->cell_dim(Cell{static_cast<std::uint32_t>(i)}) == k)
      out.coeffs_[i] = coeffs_[i];
  return out;
}

std::optional<int> CohClass::lowest_degree() const
{
  std::optional<int> low;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0)
      continue;
    const int d = space_->cell_dim(Cell{static_cast<std::uint32_t>(i)});
    if (!low || d < *low)
      low = d;
  }
  return low;
}

void CohClass::check(const CohClass& o) const
{
  if (space_ != o.space_)
    throw Error(ErrorKind::SpaceMismatch);
}

CohClass& CohClass::operator+=(const CohClass& o)
{
  check(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += o.coeffs_[i];
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& o)
{
  check(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CohClass& CohClass::operator*=(const Rational& c)
{
  for (auto& q : coeffs_)
    q *= c;
  return *this;
}

CohClass operator*(const CohClass& a, const CohClass& b)
{
  return a.space().multiply(a, b);
}

bool CohClass::operator==(const CohClass& o) const
{
  return space_ == o.space_ && coeffs_ == o.coeffs_;
}

// ---------------------------------------------------------------------------

std::shared_ptr<const FlagVariety> FlagVariety::create(std::shared_ptr<const LieType> lie, std::vector<int> subset)
{
  return std::make_shared<const FlagVariety>(std::move(lie), std::move(subset));
}

std::shared_ptr<const FlagVariety> FlagVariety::create(std::string_view type, std::vector<int> subset)
{
  return create(LieType::create(type), std::move(subset));
}

std::shared_ptr<const FlagVariety> FlagVariety::from_tables(std::shared_ptr<const LieType> lie,
                                                            std::vector<int> subset, SpaceTables tables)
{
  auto space = std::make_shared<FlagVariety>(std::move(lie), std::move(subset));
  const std::size_t n = space->num_cells();
  if (tables.csm.size() != n || tables.total_chern.size() != n)
    throw Error(ErrorKind::InvalidInput, "table dimensions do not match the space");
  for (const auto& c : tables.csm)
    if (c.size() != n)
      throw Error(ErrorKind::InvalidInput, "table dimensions do not match the space");

  std::map<std::pair<std::uint32_t, std::uint32_t>, MultTable::Row> rows;
  for (const auto& e : tables.constants) {
    if (e.a >= n || e.b >= n || e.c >= n || e.a > e.b)
      throw Error(ErrorKind::InvalidInput, "table entry out of range");
    if (space->cell_dim(Cell{e.a}) + space->cell_dim(Cell{e.b}) != space->cell_dim(Cell{e.c}))
      throw Error(ErrorKind::InvalidInput, "table entry violates the grading");
    rows[{e.a, e.b}].emplace_back(e.c, e.value);
  }
  for (std::uint32_t b = 0; b < n; ++b)
    for (std::uint32_t a = 0; a <= b; ++a) {
      auto it = rows.find({a, b});
      space->table_->preload(a, b, it == rows.end() ? MultTable::Row{} : std::move(it->second));
    }
  space->preloaded_ = std::move(tables);
  return space;
}

FlagVariety::FlagVariety(std::shared_ptr<const LieType> lie, std::vector<int> subset)
  : lie_(std::move(lie)),
    pd_(std::make_shared<const ParabolicData>(lie_->group_ptr(), std::move(subset)))
{
  table_ = std::make_unique<MultTable>(lie_, pd_);
  const WeylGroup& g = group();
  pd_dual_.reserve(num_cells());
  for (ElementId w : pd_->min_reps())
    pd_dual_.push_back(cell(pd_->coset_min_rep(g.mul(g.longest(), w))));
}

std::string FlagVariety::name() const
{
  std::string s = lie_->label();
  if (!is_borel()) {
    s += "/P{";
    for (std::size_t k = 0; k < pd_->subset().size(); ++k) {
      if (k)
        s += ",";
      s += std::to_string(pd_->subset()[k] + 1);
    }
    s += "}";
  }
  return s;
}

std::optional<Cell> FlagVariety::find_cell(ElementId w) const
{
  if (w >= group().size())
    return std::nullopt;
  auto local = pd_->local_index(w);
  if (!local)
    return std::nullopt;
  return Cell{static_cast<std::uint32_t>(*local)};
}

Cell FlagVariety::cell(ElementId w) const
{
  auto c = find_cell(w);
  if (!c)
    throw Error(ErrorKind::NotMinimalRepresentative, group().word_string(w));
  return *c;
}

Cell FlagVariety::parse_cell(std::string_view word) const
{
  return cell(group().parse(word));
}

std::vector<Cell> FlagVariety::cells() const
{
  std::vector<Cell> out(num_cells());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = Cell{static_cast<std::uint32_t>(i)};
  return out;
}

Cell FlagVariety::top_cell() const
{
  return Cell{static_cast<std::uint32_t>(num_cells() - 1)};
}

CohClass FlagVariety::zero() const
{
  return CohClass(*this, std::vector<Rational>(num_cells()));
}

CohClass FlagVariety::one() const
{
  return basis(point_cell());
}

CohClass FlagVariety::basis(Cell c) const
{
  CohClass x = zero();
  x[c] = 1;
  return x;
}

CohClass FlagVariety::multiply(const CohClass& a, const CohClass& b) const
{
  if (&a.space() != this || &b.space() != this)
    throw Error(ErrorKind::SpaceMismatch);
  const std::size_t n = num_cells();
  std::vector<Rational> out(n);
  Rational ab;
  for (std::size_t u = 0; u < n; ++u) {
    const Rational& au = a.coeffs()[u];
    if (au == 0)
      continue;
    for (std::size_t v = 0; v < n; ++v) {
      const Rational& bv = b.coeffs()[v];
      if (bv == 0)
        continue;
      const auto& row = table_->product(u, v);
      if (row.empty())
        continue;
      ab = au * bv;
      for (const auto& [w, c] : row)
        out[w] += ab * c;
    }
  }
  return CohClass(*this, std::move(out));
}

Rational FlagVariety::integrate(const CohClass& a) const
{
  if (&a.space() != this)
    throw Error(ErrorKind::SpaceMismatch);
  return a[top_cell()];
}

Cell FlagVariety::pd_dual(Cell c) const
{
  return pd_dual_[c.index];
}

Rational FlagVariety::pairing(const CohClass& a, const CohClass& b) const
{
  if (&a.space() != this || &b.space() != this)
    throw Error(ErrorKind::SpaceMismatch);
  Rational s;
  for (std::size_t u = 0; u < num_cells(); ++u) {
    const Rational& au = a.coeffs()[u];
    if (au != 0)
      s += au * b.coeffs()[pd_dual_[u].index];
  }
  return s;
}

CohClass FlagVariety::invert(const CohClass& a) const
{
  const Rational c0 = a[point_cell()];
  if (c0 == 0)
    throw Error(ErrorKind::NotInvertible);
  const Rational inv_c0 = 1 / c0;
  // a = c0 (1 + n) with n nilpotent of order at most dim + 1.
  CohClass minus_n = one() - a * inv_c0;
  CohClass result = one();
  CohClass power = one();
  for (int k = 1; k <= dim(); ++k) {
    power = multiply(power, minus_n);
    if (power.is_zero())
      break;
    result += power;
  }
  return result * inv_c0;
}

// ---------------------------------------------------------------------------

const FlagVariety& FlagVariety::borel() const
{
  if (is_borel())
    return *this;
  std::call_once(borel_once_, [this] { borel_ = create(lie_, {}); });
  return *borel_;
}

CohClass FlagVariety::pushforward(const CohClass& a) const
{
  const FlagVariety& b = borel();
  if (&a.space() != &b)
    throw Error(ErrorKind::SpaceMismatch, "pushforward expects a class on G/B");
  if (&b == this)
    return a;
  const WeylGroup& g = group();
  CohClass out = zero();
  // sigma_u is the class of X_{w0 u}; it survives only when w0 u is a minimal
  // representative, and then maps to the class of X^{u W_P}.
  for (ElementId u = 0; u < g.size(); ++u) {
    const Rational& au = a.coeffs()[u];
    if (au == 0)
      continue;
    if (!pd_->is_min_rep(g.mul(g.longest(), u)))
      continue;
    out[cell(pd_->coset_min_rep(u))] += au;
  }
  return out;
}

Cell FlagVariety::opposite(Cell nu) const
{
  return pd_dual(nu);
}

void FlagVariety::require_borel() const
{
  if (!is_borel())
    throw Error(ErrorKind::GbOnly);
}

CohClass FlagVariety::root_class(const Root& beta) const
{
  require_borel();
  const RootSystem& rs = lie_->root_system();
  if (static_cast<int>(beta.size()) != rs.rank())
    throw Error(ErrorKind::RankMismatch);
  CohClass x = zero();
  for (int j = 0; j < rs.rank(); ++j) {
    const int c = rs.coroot_pairing(j, beta);
    if (c == 0)
      continue;
    const int sj[] = {j};
    x[cell(group().from_word(sj))] = c;
  }
  return x;
}

CohClass FlagVariety::divided_difference(int i, const CohClass& a) const
{
  require_borel();
  if (&a.space() != this)
    throw Error(ErrorKind::SpaceMismatch);
  if (i < 0 || i >= group().rank())
    throw Error(ErrorKind::InvalidInput, "simple reflection index out of range");
  const WeylGroup& g = group();
  CohClass out = zero();
  for (ElementId w = 0; w < g.size(); ++w) {
    const Rational& aw = a.coeffs()[w];
    if (aw != 0 && g.has_right_descent(w, i))
      out[Cell{g.right(w, i)}] += aw;
  }
  return out;
}

CohClass FlagVariety::csm_operator(int i, const CohClass& a) const
{
  Root alpha(group().rank(), 0);
  alpha.at(i) = 1;
  CohClass d = divided_difference(i, a);
  return d + multiply(root_class(alpha), d) - a;
}

CohClass FlagVariety::csm_along_word(std::span<const int> word) const
{
  require_borel();
  const WeylGroup& g = group();
  for (int i : word)
    if (i < 0 || i >= g.rank())
      throw Error(ErrorKind::InvalidInput, "simple reflection index out of range");
  if (g.length(g.from_word(word)) != static_cast<int>(word.size()))
    throw Error(ErrorKind::InvalidInput, "word is not reduced");
  CohClass x = basis(top_cell());
  for (int i : word)
    x = csm_operator(i, x);
  return x;
}

CohClass FlagVariety::total_chern_on_borel(const std::vector<int>& excluded_subset) const
{
  require_borel();
  const RootSystem& rs = lie_->root_system();
  CohClass x = one();
  for (const Root& beta : rs.positive_roots()) {
    bool in_levi = true;
    for (int j = 0; j < rs.rank(); ++j)
      if (beta[j] != 0 && !std::binary_search(excluded_subset.begin(), excluded_subset.end(), j))
        in_levi = false;
    if (in_levi)
      continue;
    x += multiply(x, root_class(beta));
  }
  return x;
}

void FlagVariety::build_characteristic_classes() const
{
  std::call_once(classes_once_, [this] {
    const std::size_t n = num_cells();
    std::vector<CohClass> csm;
    csm.reserve(n);
    CohClass c = zero();
    if (preloaded_) {
      for (const auto& v : preloaded_->csm)
        csm.emplace_back(*this, v);
      c = CohClass(*this, preloaded_->total_chern);
    } else if (is_borel()) {
      const WeylGroup& g = group();
      csm.push_back(basis(top_cell()));
      // Elements are numbered length-lexicographically, so the parent w s_i
      // of w (i its last letter) always comes first.
      for (ElementId w = 1; w < g.size(); ++w) {
        const int last = g.word(w).back();
        csm.push_back(csm_operator(last, csm[g.right(w, last)]));
      }
      c = total_chern_on_borel({});
    } else {
      const FlagVariety& b = borel();
      for (Cell lambda : cells())
        csm.push_back(pushforward(b.csm(b.cell(element(lambda)))));
      const CohClass full = b.total_chern_on_borel(pd_->subset());
      for (ElementId w = 0; w < group().size(); ++w) {
        const Rational& cw = full.coeffs()[w];
        if (cw == 0)
          continue;
        auto local = find_cell(w);
        if (!local)
          throw Error(ErrorKind::ParabolicClosureFailure, "total Chern class leaves the span of W^P");
        c[*local] = cw;
      }
    }
    for (std::size_t k = 0; k < n; ++k)
      if (!csm[k].is_integral())
        throw Error(ErrorKind::NonIntegral, "CSM class of cell " + cell_word(Cell{std::uint32_t(k)}));
    csm_ = std::move(csm);
    total_chern_ = std::move(c);
  });
}

void FlagVariety::build_segre_classes() const
{
  build_characteristic_classes();
  std::call_once(segre_once_, [this] {
    CohClass inverse = invert(*total_chern_);
    std::vector<CohClass> ssm;
    ssm.reserve(num_cells());
    for (const auto& x : csm_)
      ssm.push_back(multiply(x, inverse));
    ssm_ = std::move(ssm);
    total_chern_inverse_ = std::move(inverse);
  });
}

const CohClass& FlagVariety::total_chern() const
{
  build_characteristic_classes();
  return *total_chern_;
}

const CohClass& FlagVariety::total_chern_inverse() const
{
  build_segre_classes();
  return *total_chern_inverse_;
}

const CohClass& FlagVariety::csm(Cell c) const
{
  build_characteristic_classes();
  return csm_.at(c.index);
}

const CohClass& FlagVariety::ssm(Cell c) const
{
  build_segre_classes();
  return ssm_.at(c.index);
}

} // namespace schubert
