#ifndef POLYVEC_REP_THEORY_HPP
#define POLYVEC_REP_THEORY_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "polyvec/character.hpp"
#include "polyvec/root_system.hpp"

namespace polyvec {

/// Multiset of irreducible constituents: dominant highest weight -> integer
/// multiplicity. Negative multiplicities mark a virtual module.
class Decomposition {
 public:
  void add(const Weight& lambda, std::int64_t mult);
  std::int64_t multiplicity(const Weight& lambda) const;
  bool is_virtual() const;
  std::size_t component_count() const { return parts_.size(); }
  BigInt multiplicity_sum() const;

  const std::map<Weight, std::int64_t>& parts() const { return parts_; }

  /// Components sorted highest-first: by height of lambda descending, then
  /// lexicographically.
  std::vector<std::pair<Weight, std::int64_t>> sorted_parts(
      const RootSystem& rs) const;

  bool operator==(const Decomposition& o) const { return parts_ == o.parts_; }

 private:
  std::map<Weight, std::int64_t> parts_;
};

/// ch V(lambda) = D_{w0}(e^lambda). Rejects non-dominant lambda.
CharacterElt irreducible_character(const RootSystem& rs, const Weight& lambda);

/// ch V(rho) via the product formula e^rho prod_{beta>0} (1 + e^(-beta)).
CharacterElt rho_character(const RootSystem& rs);

/// dim V(lambda) by the Weyl dimension formula, exact.
BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda);

/// ch(V(lambda) (x) V(mu)) by Brauer's formula D_{w0}(e^lambda ch V(mu)).
CharacterElt tensor_character(const RootSystem& rs, const Weight& lambda,
                              const Weight& mu);

/// Expands a W-invariant character in the basis {ch V(nu)} by iterated
/// leading-term subtraction. Rejects non-W-invariant input.
Decomposition decompose(const RootSystem& rs, const CharacterElt& a);

/// Reconstructs sum_nu mult * ch V(nu); decompose's exact inverse.
CharacterElt reconstruct(const RootSystem& rs, const Decomposition& d);

/// ch V(lambda) by Freudenthal's multiplicity recursion, structurally
/// independent of the Demazure route. Intended as a small-rank oracle.
CharacterElt freudenthal_character(const RootSystem& rs, const Weight& lambda);

}  // namespace polyvec

#endif
