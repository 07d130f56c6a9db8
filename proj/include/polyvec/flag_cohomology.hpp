#ifndef POLYVEC_FLAG_COHOMOLOGY_HPP
#define POLYVEC_FLAG_COHOMOLOGY_HPP

#include <set>
#include <stdexcept>
#include <vector>

#include "polyvec/bwb.hpp"
#include "polyvec/character.hpp"
#include "polyvec/rep_theory.hpp"
#include "polyvec/root_system.hpp"

namespace polyvec {

/// Thrown when a whole-exterior-algebra computation is requested for a type
/// whose 2^|Phi^+| term generation is out of desk range (E7, E8) without the
/// explicit override.
struct FeasibilityError : std::runtime_error {
  explicit FeasibilityError(const std::string& what) : std::runtime_error(what) {}
};

/// Rejects types with |Phi^+| > 24 unless force is set.
void check_feasible(const RootSystem& rs, bool force);

/// Characters of the exterior powers of n (positive roots) or u (negative
/// roots), graded by exterior degree p = 0..|Phi^+|.
struct GradedCharacter {
  std::vector<CharacterElt> by_degree;

  CharacterElt total() const;
  int top_degree() const { return static_cast<int>(by_degree.size()) - 1; }
};

GradedCharacter exterior_character(const RootSystem& rs, bool positive);

/// Euler-Poincare characteristic of L(M) from ch(M), by one Demazure sweep:
/// diamond(D_{w0}(diamond(ch M))).
CharacterElt euler_characteristic(const RootSystem& rs, const CharacterElt& ch_m);

/// chi_T of the total polyvector bundle, decomposed into irreducibles; equals
/// the decomposition of ch(V(rho) (x) V(rho)).
Decomposition polyvector_euler_decomposition(const RootSystem& rs,
                                             bool force = false);

/// Side-by-side supports for the V(rho) (x) V(rho) tensor decomposition and
/// the dominance interval below 2rho, with the multiplicity table.
struct KostantReport {
  std::set<Weight> support_tensor;
  std::set<Weight> support_order;
  Decomposition multiplicities;
  bool conjecture_holds = false;
  std::vector<Weight> counterexamples;  // symmetric difference, sorted
};

KostantReport verify_kostant(const RootSystem& rs, bool force = false);

/// Per-weight lower bounds on multiplicities in the total cohomology of the
/// polyvector bundle. The bounds are exactly the tensor multiplicities; exact
/// cohomology multiplicities can exceed them.
struct HhComponentEntry {
  Weight lambda;
  std::int64_t multiplicity_lower_bound = 0;
  bool passes_candidate_filter = false;
};

struct HhComponentReport {
  std::vector<HhComponentEntry> entries;  // highest weight first
};

HhComponentReport hh_component_report(const RootSystem& rs, bool force = false);

/// Wahl's description of H^0 of the (n-1)-st polyvector bundle: one copy of
/// V(2rho - beta) for each positive root beta with 2rho - beta dominant.
Decomposition wahl_h0(const RootSystem& rs);

/// Consistency of the top exterior power with the line bundle L(2rho).
bool top_polyvector_check(const RootSystem& rs);

}  // namespace polyvec

#endif
