#pragma once

#include "schubert/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace schubert {

/// Integer coordinates in the basis of simple roots (or simple coroots).
using Root = std::vector<int>;

/// Cartan data of a finite root system together with its positive roots.
///
/// Convention: cartan(i, j) = <alpha_i^vee, alpha_j>, so that
///   s_i(alpha_j) = alpha_j - cartan(i, j) alpha_i,
///   alpha_j      = sum_i cartan(i, j) omega_i.
/// Bourbaki numbering is used for the named types.
class RootSystem {
public:
  /// "A3", "B2", "G2", ... (A_n, B_n, C_n, D_n, E_6..8, F_4, G_2).
  static RootSystem from_label(std::string_view label);

  /// Any finite-type Cartan matrix. The label defaults to "custom".
  static RootSystem from_cartan(std::vector<std::vector<int>> cartan, std::string label = "custom");

  /// A label, or a Cartan matrix written as a JSON array of integer rows.
  static RootSystem parse(std::string_view label_or_matrix);

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  /// Simple roots first (index i is alpha_i), then by height, then lexicographically.
  const std::vector<Root>& positive_roots() const { return roots_; }
  std::size_t num_positive_roots() const { return roots_.size(); }

  /// Positive coroots in the simple-coroot basis, aligned with positive_roots().
  const std::vector<Root>& positive_coroots() const { return coroots_; }

  /// Index of a positive root, or -1.
  int root_index(const Root& r) const;

  /// <alpha_i^vee, beta> for beta in simple-root coordinates.
  int coroot_pairing(int i, const Root& beta) const;

  Root reflect(int i, const Root& beta) const;

  /// s_i acting on positive roots as a signed permutation: for root k the
  /// result is +(m+1) if s_i(beta_k) = beta_m and -(m+1) if s_i(beta_k) = -beta_m.
  int simple_reflection_action(int i, int k) const { return simple_action_[i][k]; }

  /// Rows are simple roots, columns fundamental weights: entry [j][i] is the
  /// coefficient of omega_i in alpha_j, i.e. cartan(i, j).
  std::vector<std::vector<Rational>> fundamental_weight_pairing() const;

  /// Order of s_i s_j.
  int braid_order(int i, int j) const;

private:
  RootSystem() = default;
  void enumerate_roots();

  std::string label_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
  std::vector<Root> coroots_;
  std::vector<std::vector<int>> simple_action_;
};

using ElementId = std::uint32_t;

class WeylGroup;

/// A handle to an element of a specific WeylGroup. Equality is identity of the
/// group and of the dense index; the index is canonical because elements are
/// deduplicated by their action on positive roots.
struct WeylElement {
  const WeylGroup* group = nullptr;
  ElementId id = 0;

  int length() const;
  const std::vector<int>& word() const;
  std::span<const std::int32_t> root_action() const;

  bool operator==(const WeylElement&) const = default;
};

/// The Weyl group of a root system, fully enumerated.
///
/// Elements are numbered in length-then-lexicographic order of their
/// lexicographically smallest reduced word; id 0 is the identity. Letters in
/// words are 0-based simple-reflection indices; text forms ("s1s2") are 1-based.
class WeylGroup {
public:
  static constexpr std::size_t kDefaultBound = 50000;
  static constexpr std::size_t kBruhatMatrixLimit = 2000;

  explicit WeylGroup(std::shared_ptr<const RootSystem> rs, std::size_t bound = kDefaultBound);

  const RootSystem& root_system() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }
  int rank() const { return rs_->rank(); }
  std::size_t size() const { return words_.size(); }

  // Handle-level API; every binary operation checks group membership.
  WeylElement element(ElementId id) const;
  WeylElement identity() const { return element(0); }
  WeylElement longest_element() const { return element(longest_); }
  WeylElement multiply(WeylElement u, WeylElement v) const;
  WeylElement inverse(WeylElement w) const;
  bool bruhat_leq(WeylElement u, WeylElement v) const;

  // Id-level API used by the numerical engines.
  ElementId longest() const { return longest_; }
  ElementId mul(ElementId u, ElementId v) const;
  ElementId inv(ElementId w) const { return inverse_[w]; }
  ElementId right(ElementId w, int i) const { return right_[w * rank() + i]; }
  ElementId left(int i, ElementId w) const { return left_[w * rank() + i]; }
  int length(ElementId w) const { return lengths_[w]; }
  bool has_right_descent(ElementId w, int i) const { return length(right(w, i)) < length(w); }
  bool leq(ElementId u, ElementId v) const;

  /// Lexicographically smallest reduced word.
  const std::vector<int>& word(ElementId w) const { return words_[w]; }
  /// A second reduced word, built by always splitting off the largest right
  /// descent. Differs from word() whenever w has more than one reduced word
  /// ending in different letters.
  std::vector<int> alternate_word(ElementId w) const;

  std::span<const std::int32_t> root_action(ElementId w) const;
  /// Signed index (see RootSystem::simple_reflection_action) of w(beta_k).
  std::int32_t act_on_root(ElementId w, int k) const { return root_action(w)[k]; }
  /// w(beta) for arbitrary beta in simple-root coordinates.
  Root act(ElementId w, const Root& beta) const;

  /// The reflection t_beta for positive root k.
  ElementId reflection(int k) const { return reflections_[k]; }

  ElementId from_word(std::span<const int> letters) const;
  std::string word_string(ElementId w) const;
  /// Parses "s1s2s1" (any word, reduced or not), "e" or "" for the identity.
  ElementId parse(std::string_view text) const;

  std::optional<ElementId> find(std::span<const std::int32_t> fingerprint) const;

private:
  struct FingerprintHash {
    std::size_t operator()(const std::vector<std::int32_t>& v) const noexcept;
  };

  void check(WeylElement e) const;
  bool leq_recursive(ElementId u, ElementId v) const;

  std::shared_ptr<const RootSystem> rs_;
  std::size_t nroots_ = 0;
  std::vector<std::int32_t> actions_;
  std::vector<std::vector<int>> words_;
  std::vector<int> lengths_;
  std::vector<ElementId> right_;
  std::vector<ElementId> left_;
  std::vector<ElementId> inverse_;
  std::vector<ElementId> reflections_;
  ElementId longest_ = 0;
  std::unordered_map<std::vector<std::int32_t>, ElementId, FingerprintHash> index_;
  std::vector<std::vector<std::uint64_t>> bruhat_;
};

/// W_P, the minimal coset representatives W^P for W/W_P, and dim G/P.
class ParabolicData {
public:
  /// subset holds 0-based simple-root indices generating W_P.
  ParabolicData(std::shared_ptr<const WeylGroup> group, std::vector<int> subset);

  const WeylGroup& group() const { return *group_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return group_; }
  const std::vector<int>& subset() const { return subset_; }
  bool is_borel() const { return subset_.empty(); }

  const std::vector<ElementId>& wp_elements() const { return wp_; }
  /// Sorted by element id, hence length-then-lexicographic.
  const std::vector<ElementId>& min_reps() const { return min_reps_; }
  std::size_t num_cells() const { return min_reps_.size(); }
  int dim() const { return dim_; }

  ElementId coset_min_rep(ElementId w) const;
  bool is_min_rep(ElementId w) const { return local_[w] >= 0; }
  /// Position of w in min_reps(), if w is a minimal representative.
  std::optional<std::size_t> local_index(ElementId w) const;
  /// w = lambda * u with lambda in W^P and u in W_P.
  std::pair<ElementId, ElementId> factor(ElementId w) const;

private:
  std::shared_ptr<const WeylGroup> group_;
  std::vector<int> subset_;
  std::vector<ElementId> wp_;
  std::vector<ElementId> min_reps_;
  std::vector<int> local_;
  int dim_ = 0;
};

} // namespace schubert
