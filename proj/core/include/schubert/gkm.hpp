#pragma once

#include "schubert/poly.hpp"
#include "schubert/rational.hpp"
#include "schubert/weyl.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

/// A T-equivariant class on G/B given by its restrictions to the fixed points,
/// one polynomial per Weyl group element.
class GkmClass {
public:
  GkmClass(const WeylGroup& group, std::vector<RootPoly> values);

  const WeylGroup& group() const { return *group_; }
  const std::vector<RootPoly>& values() const { return values_; }
  const RootPoly& operator[](ElementId w) const { return values_[w]; }

  /// Cohomological degree (twice the polynomial degree); 0 for the zero class,
  /// std::nullopt if inhomogeneous.
  std::optional<int> degree() const;

  GkmClass& operator+=(const GkmClass& o);
  GkmClass& operator-=(const GkmClass& o);
  friend GkmClass operator+(GkmClass a, const GkmClass& b) { return a += b; }
  friend GkmClass operator-(GkmClass a, const GkmClass& b) { return a -= b; }
  /// Pointwise (cup) product.
  friend GkmClass operator*(const GkmClass& a, const GkmClass& b);
  /// Multiplication by an element of H_T(pt).
  friend GkmClass operator*(const RootPoly& p, const GkmClass& a);

  bool operator==(const GkmClass& o) const;

private:
  void check(const GkmClass& o) const;

  const WeylGroup* group_;
  std::vector<RootPoly> values_;
};

/// Equivariant Schubert classes of G/B and the operations built on them.
///
/// sigma_w is supported on the Bruhat up-set of w and has cohomological degree
/// 2 l(w). The classes are produced top-down: sigma_{w0} is the product of the
/// positive roots at w0, and sigma_{w s_i} = d_i sigma_w whenever l(w s_i) < l(w),
/// with (d_i f)(v) = (f(v) - f(v s_i)) / (-v(alpha_i)).
class GkmModel {
public:
  explicit GkmModel(std::shared_ptr<const WeylGroup> group);

  const WeylGroup& group() const { return *group_; }
  int rank() const { return group_->rank(); }

  const GkmClass& schubert(ElementId w) const { return sigma_[w]; }
  /// The elements v >= w, in id order.
  const std::vector<ElementId>& up_set(ElementId w) const { return up_[w]; }

  /// v(alpha_i) as a linear polynomial.
  const RootPoly& root_image(ElementId v, int i) const { return images_[std::size_t(v) * rank() + i]; }

  GkmClass constant(const RootPoly& p) const;
  GkmClass zero() const;

  GkmClass divided_difference(int i, const GkmClass& c) const;

  /// GKM edge condition: alpha | c(v) - c(t_alpha v) for all v and alpha > 0.
  bool validate(const GkmClass& c) const;

  /// Coefficients kappa_w with c = sum kappa_w sigma_w. When max_length is
  /// given, only the kappa_w with l(w) <= max_length are produced and the
  /// remainder beyond that length is not checked. Throws NotInSpan.
  std::vector<RootPoly> expand(const GkmClass& c, std::optional<int> max_length = std::nullopt) const;

  GkmClass combine(const std::vector<RootPoly>& kappa) const;

  /// Non-equivariant product sigma_u . sigma_v = sum_w c_w sigma_w, as the
  /// nonzero (w, c_w); every w has l(w) = l(u) + l(v).
  std::vector<std::pair<ElementId, Rational>> product_constants(ElementId u, ElementId v) const;

private:
  std::shared_ptr<const WeylGroup> group_;
  std::vector<RootPoly> images_;
  std::vector<GkmClass> sigma_;
  std::vector<std::vector<ElementId>> up_;
};

/// A root system with its Weyl group, plus the GKM engine built on first use.
class LieType {
public:
  static std::shared_ptr<const LieType> create(std::string_view label_or_matrix,
                                               std::size_t bound = WeylGroup::kDefaultBound);
  static std::shared_ptr<const LieType> create(RootSystem rs, std::size_t bound = WeylGroup::kDefaultBound);

  const RootSystem& root_system() const { return group_->root_system(); }
  const WeylGroup& group() const { return *group_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return group_; }
  const std::string& label() const { return root_system().label(); }

  const GkmModel& gkm() const;

  explicit LieType(std::shared_ptr<const WeylGroup> group) : group_(std::move(group)) {}

private:
  std::shared_ptr<const WeylGroup> group_;
  mutable std::once_flag gkm_once_;
  mutable std::unique_ptr<GkmModel> gkm_;
};

/// Structure constants c_{uv}^w of the Schubert basis {sigma_lambda : lambda in W^P}
/// of H*(G/P), addressed by local cell indices (positions in W^P).
///
/// Rows are computed from the GKM engine on first access and are safe to
/// request concurrently. A table can also be populated up front (cache load),
/// in which case the GKM engine is never touched.
class MultTable {
public:
  using Row = std::vector<std::pair<std::uint32_t, std::int64_t>>;

  MultTable(std::shared_ptr<const LieType> lie, std::shared_ptr<const ParabolicData> pd);

  const ParabolicData& parabolic() const { return *pd_; }
  std::size_t size() const { return n_; }

  /// Nonzero (w, c_{ab}^w), sorted by w.
  const Row& product(std::size_t a, std::size_t b) const;
  std::int64_t constant(std::size_t a, std::size_t b, std::size_t c) const;

  /// Computes every row, using up to `jobs` threads.
  void materialize(unsigned jobs = 1) const;

  /// Fills a row from external data (cache); must precede any access to it.
  void preload(std::size_t a, std::size_t b, Row row);

private:
  std::size_t slot(std::size_t a, std::size_t b) const;
  Row compute(std::size_t a, std::size_t b) const;

  std::shared_ptr<const LieType> lie_;
  std::shared_ptr<const ParabolicData> pd_;
  std::size_t n_;
  std::unique_ptr<std::once_flag[]> once_;
  mutable std::vector<Row> rows_;
};

struct ChevalleyReport {
  std::size_t rows_checked = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Compares every degree-2 row sigma_{s_i} . sigma_lambda of the table with the
/// Chevalley formula sum <omega_i, beta^vee> sigma_{lambda t_beta}, the sum over
/// positive roots beta with l(lambda t_beta) = l(lambda) + 1 and lambda t_beta in W^P.
ChevalleyReport chevalley_check(const MultTable& table);

} // namespace schubert
