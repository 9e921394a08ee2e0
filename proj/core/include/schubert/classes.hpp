#pragma once

#include "schubert/gkm.hpp"
#include "schubert/rational.hpp"
#include "schubert/weyl.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace schubert {

/// A Schubert cell of G/P, addressed by the position of its minimal coset
/// representative in ParabolicData::min_reps().
struct Cell {
  std::uint32_t index = 0;
  auto operator<=>(const Cell&) const = default;
};

class FlagVariety;

/// A class in H*(G/P; Q) written in the Schubert basis {sigma_lambda}, where
/// sigma_lambda is the class of the opposite Schubert variety X^lambda and has
/// cohomological degree 2 l(lambda).
class CohClass {
public:
  CohClass(const FlagVariety& space, std::vector<Rational> coeffs);

  const FlagVariety& space() const { return *space_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](Cell c) const { return coeffs_[c.index]; }
  Rational& operator[](Cell c) { return coeffs_[c.index]; }
  std::size_t size() const { return coeffs_.size(); }

  bool is_zero() const;
  bool is_integral() const;
  /// The component of cohomological degree 2k.
  CohClass graded_part(int k) const;
  /// Smallest k with a nonzero degree-2k component, if any.
  std::optional<int> lowest_degree() const;

  CohClass& operator+=(const CohClass& o);
  CohClass& operator-=(const CohClass& o);
  CohClass& operator*=(const Rational& c);
  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator*(CohClass a, const Rational& c) { return a *= c; }
  friend CohClass operator*(const Rational& c, CohClass a) { return a *= c; }
  /// Cup product.
  friend CohClass operator*(const CohClass& a, const CohClass& b);

  bool operator==(const CohClass& o) const;

private:
  void check(const CohClass& o) const;

  const FlagVariety* space_;
  std::vector<Rational> coeffs_;
};

/// Precomputed data that lets a space skip the GKM engine entirely.
struct SpaceTables {
  /// Every nonzero c_{ab}^w with a <= b.
  struct Entry {
    std::uint32_t a, b, c;
    std::int64_t value;
  };
  std::vector<Entry> constants;
  std::vector<std::vector<Rational>> csm;
  std::vector<Rational> total_chern;
};

/// The partial flag variety G/P with its Schubert calculus: cup product,
/// integration, CSM and SSM classes of Schubert cells, total Chern class.
///
/// Everything heavy is computed on first use and cached; a FlagVariety is
/// safe to share between threads.
class FlagVariety {
public:
  /// subset: 0-based simple-root indices generating P (empty for G/B).
  static std::shared_ptr<const FlagVariety> create(std::shared_ptr<const LieType> lie, std::vector<int> subset);
  static std::shared_ptr<const FlagVariety> create(std::string_view type, std::vector<int> subset);
  static std::shared_ptr<const FlagVariety> from_tables(std::shared_ptr<const LieType> lie, std::vector<int> subset,
                                                        SpaceTables tables);

  FlagVariety(std::shared_ptr<const LieType> lie, std::vector<int> subset);
  FlagVariety(const FlagVariety&) = delete;
  FlagVariety& operator=(const FlagVariety&) = delete;

  const LieType& lie() const { return *lie_; }
  std::shared_ptr<const LieType> lie_ptr() const { return lie_; }
  const WeylGroup& group() const { return lie_->group(); }
  const ParabolicData& parabolic() const { return *pd_; }
  bool is_borel() const { return pd_->is_borel(); }
  std::size_t num_cells() const { return pd_->num_cells(); }
  int dim() const { return pd_->dim(); }
  /// "A2", "A3/P{1,3}" (1-based indices).
  std::string name() const;

  // Cells.
  ElementId element(Cell c) const { return pd_->min_reps()[c.index]; }
  int cell_dim(Cell c) const { return group().length(element(c)); }
  std::optional<Cell> find_cell(ElementId w) const;
  /// Throws NotMinimalRepresentative.
  Cell cell(ElementId w) const;
  Cell parse_cell(std::string_view word) const;
  std::string cell_word(Cell c) const { return group().word_string(element(c)); }
  std::vector<Cell> cells() const;
  Cell point_cell() const { return Cell{0}; }
  Cell top_cell() const;

  // Arithmetic.
  const MultTable& table() const { return *table_; }
  CohClass zero() const;
  CohClass one() const;
  CohClass basis(Cell c) const;
  CohClass multiply(const CohClass& a, const CohClass& b) const;
  /// Coefficient of the point class sigma_{top}.
  Rational integrate(const CohClass& a) const;
  /// Index pairing: integral of sigma_u sigma_v is 1 iff v = pd_dual(u).
  Cell pd_dual(Cell c) const;
  /// Integral of a.b through the duality pairing, without forming the product.
  Rational pairing(const CohClass& a, const CohClass& b) const;
  /// Throws NotInvertible when the degree-0 coefficient vanishes.
  CohClass invert(const CohClass& a) const;

  // Characteristic classes.
  const CohClass& total_chern() const;
  const CohClass& total_chern_inverse() const;
  const CohClass& csm(Cell c) const;
  const CohClass& ssm(Cell c) const;
  /// nu' with nu' W_P = w0 nu W_P; c_SM of the opposite cell of nu equals csm(nu').
  Cell opposite(Cell nu) const;

  /// The G/B variety of the same type (this object when P is the Borel).
  const FlagVariety& borel() const;
  /// Pushforward along G/B -> G/P of a class on borel().
  CohClass pushforward(const CohClass& a) const;

  // G/B only (throw GbOnly otherwise).
  /// degree-2 class of a weight/root: sum_j <alpha_j^vee, beta> sigma_{s_j}.
  CohClass root_class(const Root& beta) const;
  CohClass divided_difference(int i, const CohClass& a) const;
  /// T_i = (1 + alpha_i) . d_i - id.
  CohClass csm_operator(int i, const CohClass& a) const;
  /// Applies the T operators along a reduced word, starting at the point class.
  CohClass csm_along_word(std::span<const int> word) const;

private:
  void require_borel() const;
  void build_characteristic_classes() const;
  void build_segre_classes() const;
  CohClass total_chern_on_borel(const std::vector<int>& excluded_subset) const;

  std::shared_ptr<const LieType> lie_;
  std::shared_ptr<const ParabolicData> pd_;
  std::unique_ptr<MultTable> table_;
  std::vector<Cell> pd_dual_;

  mutable std::once_flag borel_once_;
  mutable std::shared_ptr<const FlagVariety> borel_;

  mutable std::once_flag classes_once_;
  mutable std::vector<CohClass> csm_;
  mutable std::optional<CohClass> total_chern_;
  mutable std::once_flag segre_once_;
  mutable std::vector<CohClass> ssm_;
  mutable std::optional<CohClass> total_chern_inverse_;

  std::optional<SpaceTables> preloaded_;
};

} // namespace schubert
