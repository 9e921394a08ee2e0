#include "schubert/poly.hpp"

#include "schubert/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace schubert {

Monomial Monomial::variable(int i)
{
  if (i < 0 || i >= kMaxVariables)
    throw Error(ErrorKind::RankMismatch, "variable index out of range");
  return Monomial((std::uint64_t{1} << 56) | (std::uint64_t{1} << shift(i)));
}

Monomial Monomial::from_exponents(std::span<const int> exps)
{
  if (static_cast<int>(exps.size()) > kMaxVariables)
    throw Error(ErrorKind::RankMismatch, "polynomials support at most 7 variables");
  std::uint64_t key = 0;
  int deg = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 255)
      throw Error(ErrorKind::InvalidInput, "exponent out of range");
    deg += exps[i];
    key |= std::uint64_t(exps[i]) << shift(static_cast<int>(i));
  }
  if (deg > 255)
    throw Error(ErrorKind::InvalidInput, "degree out of range");
  return Monomial(key | (std::uint64_t(deg) << 56));
}

bool Monomial::divides(Monomial m) const
{
  if (degree() > m.degree())
    return false;
  for (int i = 0; i < kMaxVariables; ++i)
    if (exponent(i) > m.exponent(i))
      return false;
  return true;
}

Monomial Monomial::operator*(Monomial m) const
{
  if (degree() + m.degree() > 255)
    throw Error(ErrorKind::InvalidInput, "degree out of range");
  return Monomial(key_ + m.key_);
}

Monomial Monomial::operator/(Monomial m) const
{
  return Monomial(key_ - m.key_);
}

// ---------------------------------------------------------------------------

RootPoly::RootPoly(int rank) : rank_(rank)
{
  if (rank < 0 || rank > Monomial::kMaxVariables)
    throw Error(ErrorKind::RankMismatch, "polynomials support rank at most 7");
}

RootPoly RootPoly::constant(int rank, const Rational& c)
{
  RootPoly p(rank);
  if (c != 0)
    p.terms_.push_back({Monomial{}, c});
  return p;
}

RootPoly RootPoly::variable(int rank, int i)
{
  if (i < 0 || i >= rank)
    throw Error(ErrorKind::RankMismatch, "variable index out of range");
  RootPoly p(rank);
  p.terms_.push_back({Monomial::variable(i), Rational(1)});
  return p;
}

RootPoly RootPoly::linear(int rank, std::span<const int> coeffs)
{
  if (static_cast<int>(coeffs.size()) != rank)
    throw Error(ErrorKind::RankMismatch);
  RootPoly p(rank);
  for (int i = 0; i < rank; ++i)
    if (coeffs[i] != 0)
      p.terms_.push_back({Monomial::variable(i), Rational(coeffs[i])});
  return p;
}

RootPoly RootPoly::from_terms(int rank, std::vector<Term> terms)
{
  RootPoly p(rank);
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  for (auto& t : terms) {
    for (int i = rank; i < Monomial::kMaxVariables; ++i)
      if (t.monomial.exponent(i) != 0)
        throw Error(ErrorKind::RankMismatch, "exponent beyond rank");
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial)
      p.terms_.back().coeff += t.coeff;
    else
      p.terms_.push_back(std::move(t));
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coeff == 0; });
  return p;
}

int RootPoly::degree() const
{
  return terms_.empty() ? -1 : terms_.front().monomial.degree();
}

bool RootPoly::is_homogeneous() const
{
  return terms_.empty() || terms_.front().monomial.degree() == terms_.back().monomial.degree();
}

Rational RootPoly::coefficient(Monomial m) const
{
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Monomial key) { return t.monomial > key; });
  if (it != terms_.end() && it->monomial == m)
    return it->coeff;
  return 0;
}

void RootPoly::check_rank(const RootPoly& q) const
{
  if (rank_ != q.rank_)
    throw Error(ErrorKind::RankMismatch,
                std::to_string(rank_) + " vs " + std::to_string(q.rank_));
}

RootPoly& RootPoly::operator+=(const RootPoly& q)
{
  check_rank(q);
  if (q.terms_.empty())
    return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + q.terms_.size());
  auto a = terms_.begin();
  auto b = q.terms_.begin();
  while (a != terms_.end() || b != q.terms_.end()) {
    if (b == q.terms_.end() || (a != terms_.end() && a->monomial > b->monomial)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->monomial > a->monomial) {
      out.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0)
        out.push_back({a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

RootPoly& RootPoly::operator-=(const RootPoly& q)
{
  check_rank(q);
  subtract_scaled_shifted(q, Monomial{}, Rational(1));
  return *this;
}

void RootPoly::subtract_scaled_shifted(const RootPoly& q, Monomial m, const Rational& c)
{
  // *this -= c * m * q; multiplying by a monomial preserves term order.
  std::vector<Term> out;
  out.reserve(terms_.size() + q.terms_.size());
  auto a = terms_.begin();
  auto b = q.terms_.begin();
  while (a != terms_.end() || b != q.terms_.end()) {
    const bool take_b = b != q.terms_.end();
    const Monomial mb = take_b ? b->monomial * m : Monomial{};
    if (!take_b || (a != terms_.end() && a->monomial > mb)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || mb > a->monomial) {
      out.push_back({mb, -(c * b->coeff)});
      ++b;
    } else {
      Rational v = a->coeff - c * b->coeff;
      if (v != 0)
        out.push_back({mb, std::move(v)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

RootPoly& RootPoly::operator*=(const Rational& c)
{
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_)
    t.coeff *= c;
  return *this;
}

RootPoly RootPoly::operator-() const
{
  RootPoly p = *this;
  for (auto& t : p.terms_)
    t.coeff = -t.coeff;
  return p;
}

RootPoly operator*(const RootPoly& p, const RootPoly& q)
{
  p.check_rank(q);
  if (p.terms_.empty() || q.terms_.empty())
    return RootPoly(p.rank_);
  std::vector<Term> prod;
  prod.reserve(p.terms_.size() * q.terms_.size());
  for (const auto& s : p.terms_)
    for (const auto& t : q.terms_)
      prod.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  return RootPoly::from_terms(p.rank_, std::move(prod));
}

RootPoly RootPoly::truncated(int max_degree) const
{
  RootPoly p(rank_);
  for (const auto& t : terms_)
    if (t.monomial.degree() <= max_degree)
      p.terms_.push_back(t);
  return p;
}

Rational RootPoly::eval_zero() const
{
  if (!terms_.empty() && terms_.back().monomial == Monomial{})
    return terms_.back().coeff;
  return 0;
}

std::optional<RootPoly> RootPoly::try_divide(const RootPoly& q) const
{
  check_rank(q);
  if (terms_.empty())
    return RootPoly(rank_);
  if (q.terms_.empty())
    return std::nullopt;
  const Term& lead = q.terms_.front();
  RootPoly rem = *this;
  std::vector<Term> quotient;
  while (!rem.terms_.empty()) {
    const Term& lt = rem.terms_.front();
    if (!lead.monomial.divides(lt.monomial))
      return std::nullopt;
    Term t{lt.monomial / lead.monomial, lt.coeff / lead.coeff};
    rem.subtract_scaled_shifted(q, t.monomial, t.coeff);
    quotient.push_back(std::move(t));
  }
  RootPoly out(rank_);
  out.terms_ = std::move(quotient);
  return out;
}

std::string RootPoly::to_json_text() const
{
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : terms_) {
    nlohmann::json exps = nlohmann::json::array();
    for (int i = 0; i < rank_; ++i)
      exps.push_back(t.monomial.exponent(i));
    arr.push_back(nlohmann::json::array({exps, to_fraction_text(t.coeff)}));
  }
  return arr.dump();
}

RootPoly RootPoly::from_json_text(int rank, std::string_view text)
{
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed polynomial: ") + e.what());
  }
  if (!arr.is_array())
    throw Error(ErrorKind::InvalidInput, "polynomial must be an array of terms");
  std::vector<Term> terms;
  for (const auto& entry : arr) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array() || !entry[1].is_string())
      throw Error(ErrorKind::InvalidInput, "term must be [exponents, \"num/den\"]");
    if (static_cast<int>(entry[0].size()) != rank)
      throw Error(ErrorKind::RankMismatch, "exponent tuple length differs from rank");
    std::vector<int> exps;
    for (const auto& e : entry[0]) {
      if (!e.is_number_integer())
        throw Error(ErrorKind::InvalidInput, "exponents must be integers");
      exps.push_back(e.get<int>());
    }
    terms.push_back({Monomial::from_exponents(exps), parse_rational(entry[1].get<std::string>())});
  }
  return from_terms(rank, std::move(terms));
}

std::string RootPoly::to_string() const
{
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    } else if (c < 0) {
      os << "-";
      c = -c;
    }
    first = false;
    const bool is_const = t.monomial == Monomial{};
    if (is_const || c != 1) {
      os << c.get_str();
      if (!is_const)
        os << "*";
    }
    bool need_star = false;
    for (int i = 0; i < rank_; ++i) {
      const int e = t.monomial.exponent(i);
      if (e == 0)
        continue;
      if (need_star)
        os << "*";
      os << "a" << (i + 1);
      if (e > 1)
        os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

RootPoly exact_divide(const RootPoly& p, const RootPoly& q)
{
  auto r = p.try_divide(q);
  if (!r)
    throw Error(ErrorKind::NotDivisible, p.to_string() + " by " + q.to_string());
  return *std::move(r);
}

RootPoly root_poly(const Root& beta)
{
  return RootPoly::linear(static_cast<int>(beta.size()), beta);
}

RootPoly weyl_substitute(const WeylGroup& group, ElementId w, const RootPoly& p)
{
  const int r = group.rank();
  if (p.rank() != r)
    throw Error(ErrorKind::RankMismatch);
  if (w == 0 || p.is_zero())
    return p;

  std::vector<std::vector<RootPoly>> powers(r);
  for (int j = 0; j < r; ++j) {
    Root e(r, 0);
    e[j] = 1;
    powers[j].push_back(RootPoly::constant(r, 1));
    powers[j].push_back(root_poly(group.act(w, e)));
  }
  auto power = [&](int j, int e) -> const RootPoly& {
    while (static_cast<int>(powers[j].size()) <= e)
      powers[j].push_back(powers[j].back() * powers[j][1]);
    return powers[j][e];
  };

  RootPoly out(r);
  for (const auto& t : p.terms()) {
    RootPoly term = RootPoly::constant(r, t.coeff);
    for (int j = 0; j < r; ++j) {
      const int e = t.monomial.exponent(j);
      if (e > 0)
        term = term * power(j, e);
    }
    out += term;
  }
  return out;
}

} // namespace schubert
