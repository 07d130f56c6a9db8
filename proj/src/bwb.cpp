#include "polyvec/bwb.hpp"

namespace polyvec {

BwbResult bwb_line_bundle(const RootSystem& rs, const Weight& lambda) {
  // Normalize lambda + rho into the dominant chamber, counting reflections;
  // a zero coordinate along the way means a singular orbit and vanishing.
  Weight v = lambda + rs.rho();
  int length = 0;
  while (true) {
    int pick = -1;
    for (int i = 0; i < rs.rank(); ++i) {
      if (v[i] == 0) return BwbResult::vanishing();
      if (pick < 0 && v[i] < 0) pick = i;
    }
    if (pick < 0) return BwbResult::cohomology(length, v - rs.rho());
    v = rs.simple_reflection(pick + 1, v);
    ++length;
  }
}

std::set<Weight> cohomology_support_candidates(
    const RootSystem& rs, const std::vector<Weight>& module_weights) {
  std::set<Weight> candidates;
  for (const auto& xi : module_weights) {
    const BwbResult r = bwb_line_bundle(rs, -xi);
    // H^*(L(-xi)) = V(nu)^* = V(nu^*); the candidate is the dual weight.
    if (!r.vanishes) candidates.insert(rs.dual(r.dual_highest_weight));
  }
  return candidates;
}

}  // namespace polyvec
