#include "polyvec/flag_cohomology.hpp"

#include <algorithm>

namespace polyvec {

void check_feasible(const RootSystem& rs, bool force) {
  constexpr std::size_t kMaxPositiveRoots = 24;
  if (!force && rs.positive_roots().size() > kMaxPositiveRoots)
    throw FeasibilityError(rs.name() + " has " +
                           std::to_string(rs.positive_roots().size()) +
                           " positive roots; whole-exterior-algebra "
                           "computations need an explicit override");
}

CharacterElt GradedCharacter::total() const {
  CharacterElt t(by_degree.empty() ? 0 : by_degree.front().rank());
  for (const auto& c : by_degree) t += c;
  return t;
}

GradedCharacter exterior_character(const RootSystem& rs, bool positive) {
  const int n = static_cast<int>(rs.positive_roots().size());
  GradedCharacter g;
  g.by_degree.assign(static_cast<std::size_t>(n) + 1, CharacterElt(rs.rank()));
  g.by_degree[0].add_term(Weight::zero(rs.rank()), 1);
  int used = 0;
  for (const auto& root : rs.positive_roots()) {
    const Weight beta = positive ? root : -root;
    ++used;
    for (int p = std::min(used, n); p >= 1; --p) {
      CharacterElt& dst = g.by_degree[static_cast<std::size_t>(p)];
      for (const auto& [w, c] : g.by_degree[static_cast<std::size_t>(p - 1)].terms())
        dst.add_term(w + beta, c);
    }
  }
  return g;
}

CharacterElt euler_characteristic(const RootSystem& rs, const CharacterElt& ch_m) {
  return diamond(demazure_word(rs, rs.w0_word(), diamond(ch_m)));
}

Decomposition polyvector_euler_decomposition(const RootSystem& rs, bool force) {
  check_feasible(rs, force);
  const CharacterElt total = exterior_character(rs, /*positive=*/false).total();
  return decompose(rs, euler_characteristic(rs, total));
}

namespace {

std::vector<Weight> sorted_by_height(const RootSystem& rs,
                                     std::vector<Weight> ws) {
  std::sort(ws.begin(), ws.end(), [&rs](const Weight& a, const Weight& b) {
    const auto ha = rs.height_key(a), hb = rs.height_key(b);
    return ha != hb ? ha > hb : a < b;
  });
  return ws;
}

}  // namespace

KostantReport verify_kostant(const RootSystem& rs, bool force) {
  check_feasible(rs, force);
  KostantReport report;
  report.multiplicities =
      decompose(rs, tensor_character(rs, rs.rho(), rs.rho()));
  for (const auto& [w, m] : report.multiplicities.parts())
    if (m > 0) report.support_tensor.insert(w);
  for (const auto& w : rs.dominant_below(rs.two_rho()))
    report.support_order.insert(w);
  std::vector<Weight> diff;
  for (const auto& w : report.support_tensor)
    if (!report.support_order.contains(w)) diff.push_back(w);
  for (const auto& w : report.support_order)
    if (!report.support_tensor.contains(w)) diff.push_back(w);
  report.counterexamples = sorted_by_height(rs, std::move(diff));
  report.conjecture_holds = report.counterexamples.empty();
  return report;
}

HhComponentReport hh_component_report(const RootSystem& rs, bool force) {
  check_feasible(rs, force);
  const Decomposition tensor =
      decompose(rs, tensor_character(rs, rs.rho(), rs.rho()));
  const CharacterElt ext_total = exterior_character(rs, /*positive=*/false).total();
  std::vector<Weight> module_weights;
  for (const auto& [w, c] : ext_total.terms()) module_weights.push_back(w);
  const std::set<Weight> candidates =
      cohomology_support_candidates(rs, module_weights);
  HhComponentReport report;
  for (const auto& lambda : rs.dominant_below(rs.two_rho())) {
    HhComponentEntry e;
    e.lambda = lambda;
    e.multiplicity_lower_bound = tensor.multiplicity(lambda);
    e.passes_candidate_filter = candidates.contains(lambda);
    report.entries.push_back(std::move(e));
  }
  return report;
}

Decomposition wahl_h0(const RootSystem& rs) {
  Decomposition d;
  const Weight two_rho = rs.two_rho();
  for (const auto& beta : rs.positive_roots()) {
    const Weight w = two_rho - beta;
    if (w.is_dominant()) d.add(w, 1);
  }
  return d;
}

bool top_polyvector_check(const RootSystem& rs) {
  const Weight two_rho = rs.two_rho();
  const GradedCharacter g = exterior_character(rs, /*positive=*/false);
  const CharacterElt& top = g.by_degree.back();
  if (top.term_count() != 1 || top.coeff(-two_rho) != 1) return false;
  const BwbResult r = bwb_line_bundle(rs, two_rho);
  if (r.vanishes || r.degree != 0 || !(r.dual_highest_weight == two_rho))
    return false;
  const Decomposition d = decompose(rs, euler_characteristic(rs, top));
  Decomposition expected;
  expected.add(two_rho, 1);
  return d == expected;
}

}  // namespace polyvec
