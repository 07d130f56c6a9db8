#ifndef POLYVEC_ROOT_SYSTEM_HPP
#define POLYVEC_ROOT_SYSTEM_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyvec/weight.hpp"

namespace polyvec {

/// A word in the simple reflections; letters are 1-based indices.
using WeylWord = std::vector<int>;

/// Combinatorial data of a simple root system in Bourbaki numbering.
///
/// Weights live in fundamental-weight coordinates throughout; simple root
/// alpha_j is column j of the Cartan matrix in those coordinates. Instances
/// are immutable after construction and safe to share across threads.
class RootSystem {
 public:
  /// Builds the root system of the given simple type, e.g. ('D', 4).
  /// Rejects invalid (type, rank) pairs.
  static RootSystem build(char type_label, int rank);

  char type_label() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

  /// Cartan entry a_ij = <alpha_j, alpha_i^vee>, 0-based indices.
  std::int64_t cartan(int i, int j) const { return cartan_[i][j]; }

  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }

  /// Root-basis coordinates of the k-th positive root.
  const std::vector<std::int64_t>& positive_root_coords(int k) const {
    return positive_root_coords_[k];
  }

  /// Symmetrizer d_i = (alpha_i, alpha_i)/2, normalized to minimal positive
  /// integers.
  std::int64_t symmetrizer(int i) const { return sym_[i]; }

  const Weight& rho() const { return rho_; }
  Weight two_rho() const { return rho_ + rho_; }

  /// A reduced expression of the longest element, from the greedy descent
  /// algorithm; its length is |Phi^+|.
  const WeylWord& w0_word() const { return w0_word_; }

  /// s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i; i is 1-based.
  Weight simple_reflection(int i, const Weight& lambda) const;

  /// Plain action of a word [i1,...,ik]: lambda -> s_i1(s_i2(...s_ik(lambda))).
  Weight act(std::span<const int> word, const Weight& lambda) const;

  /// Dot action w . lambda = w(lambda + rho) - rho.
  Weight dot_act(std::span<const int> word, const Weight& lambda) const;

  bool is_dominant(const Weight& lambda) const { return lambda.is_dominant(); }

  /// The dominant W-conjugate of lambda (plain action).
  Weight make_dominant(const Weight& lambda) const;

  /// True iff hi - lo is a nonnegative-integer combination of simple roots.
  bool dominance_leq(const Weight& lo, const Weight& hi) const;

  /// Root-basis coordinates of lambda, if lambda lies in the root lattice.
  std::optional<std::vector<std::int64_t>> root_coords(const Weight& lambda) const;

  /// det(Cartan) times the height of lambda (sum of root-basis coefficients);
  /// integer for every integral weight, monotone in height.
  std::int64_t height_key(const Weight& lambda) const;

  /// dual_weight: -w0(lambda); maps dominant to dominant.
  Weight dual(const Weight& lambda) const;

  /// All dominant weights <= mu in dominance order, sorted by height of
  /// (mu - lambda) then lexicographically. Rejects non-dominant mu.
  std::vector<Weight> dominant_below(const Weight& mu) const;

  /// Inner product (lambda, beta) for beta given in root-basis coordinates;
  /// always an integer.
  std::int64_t inner_with_root(const Weight& lambda,
                               std::span<const std::int64_t> beta_coords) const;

  /// (beta, beta)/2 for beta in root-basis coordinates.
  std::int64_t half_norm(std::span<const std::int64_t> beta_coords) const;

  /// Full W-orbit of a weight under the plain action.
  std::vector<Weight> orbit(const Weight& lambda) const;

 private:
  RootSystem() = default;
  void check_weight(const Weight& w) const;

  char type_ = 0;
  int rank_ = 0;
  std::vector<std::vector<std::int64_t>> cartan_;
  std::vector<std::vector<std::int64_t>> adjugate_;  // adj(C), C*adj = det*I
  std::int64_t cartan_det_ = 0;
  std::vector<std::int64_t> sym_;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> positive_roots_;
  std::vector<std::vector<std::int64_t>> positive_root_coords_;
  Weight rho_;
  WeylWord w0_word_;
};

}  // namespace polyvec

#endif
