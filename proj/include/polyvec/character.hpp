#ifndef POLYVEC_CHARACTER_HPP
#define POLYVEC_CHARACTER_HPP

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "polyvec/root_system.hpp"
#include "polyvec/weight.hpp"

namespace polyvec {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse element of the group ring Z[P]: a finite integer combination of
/// monomials e^mu. Zero coefficients are never stored.
class CharacterElt {
 public:
  using TermMap = std::unordered_map<Weight, std::int64_t, WeightHash>;

  explicit CharacterElt(int rank) : rank_(rank) {}

  static CharacterElt monomial(const Weight& mu, std::int64_t coeff = 1) {
    CharacterElt c(mu.rank());
    c.add_term(mu, coeff);
    return c;
  }

  int rank() const { return rank_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::int64_t coeff(const Weight& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(const Weight& mu, std::int64_t coeff);

  const TermMap& terms() const { return terms_; }

  /// Sum of coefficients; arbitrary precision since honest-module totals
  /// reach 2^(2|Phi^+|).
  BigInt total_dimension() const;

  /// Terms in canonical order: lexicographic on coordinates.
  std::vector<std::pair<Weight, std::int64_t>> sorted_terms() const;

  CharacterElt& operator+=(const CharacterElt& o);
  CharacterElt& operator-=(const CharacterElt& o);
  CharacterElt operator+(const CharacterElt& o) const;
  CharacterElt operator-(const CharacterElt& o) const;
  CharacterElt scaled(std::int64_t k) const;

  bool operator==(const CharacterElt& o) const;

  void reserve(std::size_t n) { terms_.reserve(n); }

 private:
  int rank_;
  TermMap terms_;
};

/// Convolution product: realizes the tensor product at the character level.
CharacterElt char_mul(const CharacterElt& a, const CharacterElt& b);

/// The involution e^mu -> e^(-mu), extended linearly.
CharacterElt diamond(const CharacterElt& a);

/// Plain Weyl-group action of s_i on every monomial.
CharacterElt reflect(const RootSystem& rs, int i, const CharacterElt& a);

/// Demazure operator D_i, evaluated by the monomial closed form:
/// with n = <lambda, alpha_i^vee>,
///   n >= 0:  D_i e^lambda = sum_{k=0}^{n} e^(lambda - k alpha_i)
///   n == -1: 0
///   n <= -2: -sum_{k=1}^{-n-1} e^(lambda + k alpha_i)
CharacterElt demazure_apply(const RootSystem& rs, int i, const CharacterElt& a);

/// D_w for a reduced word [i1,...,ik]: applies D_ik first, D_i1 last.
/// Reducedness is the caller's contract; non-reduced words get the same
/// sequential evaluation with no particular meaning.
CharacterElt demazure_word(const RootSystem& rs, std::span<const int> word,
                           const CharacterElt& a);

/// True iff the term multiset is invariant under every simple reflection.
bool is_weyl_invariant(const RootSystem& rs, const CharacterElt& a);

}  // namespace polyvec

#endif
