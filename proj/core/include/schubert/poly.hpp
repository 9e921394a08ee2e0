#pragma once

#include "schubert/rational.hpp"
#include "schubert/weyl.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/// A monomial in the simple roots alpha_1..alpha_r, packed into one word:
/// the total degree in the top byte followed by one byte per exponent.
/// Comparing packed keys as integers is graded lexicographic order.
class Monomial {
public:
  static constexpr int kMaxVariables = 7;

  constexpr Monomial() = default;
  static Monomial variable(int i);
  static Monomial from_exponents(std::span<const int> exps);

  int degree() const { return static_cast<int>(key_ >> 56); }
  int exponent(int i) const { return static_cast<int>((key_ >> shift(i)) & 0xffu); }
  std::uint64_t key() const { return key_; }

  bool divides(Monomial m) const;
  Monomial operator*(Monomial m) const;
  /// Requires divides(m) to hold for *this = m * quotient.
  Monomial operator/(Monomial m) const;

  auto operator<=>(const Monomial&) const = default;

private:
  static constexpr int shift(int i) { return 48 - 8 * i; }
  explicit constexpr Monomial(std::uint64_t k) : key_(k) {}
  std::uint64_t key_ = 0;
};

struct Term {
  Monomial monomial;
  Rational coeff;

  bool operator==(const Term&) const = default;
};

/// Exact sparse polynomial over Q in the simple-root indeterminates.
///
/// Terms are kept in strictly decreasing graded-lexicographic order with no
/// zero coefficients, so the zero polynomial has no terms and the leading term
/// is terms().front().
class RootPoly {
public:
  explicit RootPoly(int rank = 0);

  static RootPoly constant(int rank, const Rational& c);
  static RootPoly variable(int rank, int i);
  /// sum_j coeffs[j] alpha_j
  static RootPoly linear(int rank, std::span<const int> coeffs);
  /// Terms may arrive in any order and with repeated monomials.
  static RootPoly from_terms(int rank, std::vector<Term> terms);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  const std::vector<Term>& terms() const { return terms_; }
  Rational coefficient(Monomial m) const;

  RootPoly& operator+=(const RootPoly& q);
  RootPoly& operator-=(const RootPoly& q);
  RootPoly& operator*=(const Rational& c);
  RootPoly operator-() const;
  friend RootPoly operator+(RootPoly p, const RootPoly& q) { return p += q; }
  friend RootPoly operator-(RootPoly p, const RootPoly& q) { return p -= q; }
  friend RootPoly operator*(const RootPoly& p, const RootPoly& q);
  friend RootPoly operator*(RootPoly p, const Rational& c) { return p *= c; }
  friend RootPoly operator*(const Rational& c, RootPoly p) { return p *= c; }

  /// Drops every term of degree greater than max_degree.
  RootPoly truncated(int max_degree) const;

  /// Constant term, i.e. the value at alpha = 0.
  Rational eval_zero() const;

  /// Quotient when q divides *this exactly, std::nullopt otherwise.
  std::optional<RootPoly> try_divide(const RootPoly& q) const;

  /// [[exps...], "num/den"] pairs in term order.
  std::string to_json_text() const;
  static RootPoly from_json_text(int rank, std::string_view text);

  /// Human-readable form, e.g. "2*a1^2*a2 - 1/3*a3".
  std::string to_string() const;

  bool operator==(const RootPoly& q) const { return rank_ == q.rank_ && terms_ == q.terms_; }

private:
  void check_rank(const RootPoly& q) const;
  void subtract_scaled_shifted(const RootPoly& q, Monomial m, const Rational& c);

  int rank_;
  std::vector<Term> terms_;
};

/// Throws ErrorKind::NotDivisible if q does not divide p, and on q == 0 with p != 0.
RootPoly exact_divide(const RootPoly& p, const RootPoly& q);

/// Left action of W on the polynomial ring: alpha_j -> w(alpha_j).
RootPoly weyl_substitute(const WeylGroup& group, ElementId w, const RootPoly& p);

/// The root beta (simple-root coordinates) as a linear polynomial.
RootPoly root_poly(const Root& beta);

} // namespace schubert
