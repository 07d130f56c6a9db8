#ifndef POLYVEC_BWB_HPP
#define POLYVEC_BWB_HPP

#include <set>
#include <vector>

#include "polyvec/root_system.hpp"

namespace polyvec {

/// Outcome of Borel-Weil-Bott for one line bundle L(lambda): either all
/// cohomology vanishes, or exactly one degree survives with
/// H^degree(G/B, L(lambda)) = V(dual_highest_weight)^*.
struct BwbResult {
  bool vanishes = true;
  int degree = 0;
  Weight dual_highest_weight;

  static BwbResult vanishing() { return BwbResult{}; }
  static BwbResult cohomology(int degree, Weight hw) {
    return BwbResult{false, degree, std::move(hw)};
  }

  bool operator==(const BwbResult& o) const {
    if (vanishes != o.vanishes) return false;
    if (vanishes) return true;
    return degree == o.degree && dual_highest_weight == o.dual_highest_weight;
  }
};

/// Cohomology of the line bundle L(lambda). The sign convention
/// L(lambda) = L(C_{-lambda}) is internal to this function; callers pass the
/// lambda of L(lambda).
BwbResult bwb_line_bundle(const RootSystem& rs, const Weight& lambda);

/// Dominant mu that can appear in H^*(G/B, L(M)) for a B-module M with the
/// given weight multiset: runs BWB on each L(-xi) and dualizes the survivors.
std::set<Weight> cohomology_support_candidates(const RootSystem& rs,
                                               const std::vector<Weight>& module_weights);

}  // namespace polyvec

#endif
