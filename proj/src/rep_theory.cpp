#include "polyvec/rep_theory.hpp"

#include <algorithm>
#include <unordered_map>

#include "polyvec/arith.hpp"

namespace polyvec {

void Decomposition::add(const Weight& lambda, std::int64_t mult) {
  if (mult == 0) return;
  if (!lambda.is_dominant())
    throw std::invalid_argument("decomposition keys must be dominant");
  auto [it, inserted] = parts_.try_emplace(lambda, mult);
  if (!inserted) {
    it->second = checked_add(it->second, mult);
    if (it->second == 0) parts_.erase(it);
  }
}

std::int64_t Decomposition::multiplicity(const Weight& lambda) const {
  auto it = parts_.find(lambda);
  return it == parts_.end() ? 0 : it->second;
}

bool Decomposition::is_virtual() const {
  for (const auto& [w, m] : parts_)
    if (m < 0) return true;
  return false;
}

BigInt Decomposition::multiplicity_sum() const {
  BigInt total = 0;
  for (const auto& [w, m] : parts_) total += m;
  return total;
}

std::vector<std::pair<Weight, std::int64_t>> Decomposition::sorted_parts(
    const RootSystem& rs) const {
  std::vector<std::pair<Weight, std::int64_t>> out(parts_.begin(), parts_.end());
  std::sort(out.begin(), out.end(), [&rs](const auto& a, const auto& b) {
    const auto ha = rs.height_key(a.first), hb = rs.height_key(b.first);
    return ha != hb ? ha > hb : a.first < b.first;
  });
  return out;
}

CharacterElt irreducible_character(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("irreducible_character requires a dominant weight");
  return demazure_word(rs, rs.w0_word(), CharacterElt::monomial(lambda));
}

CharacterElt rho_character(const RootSystem& rs) {
  CharacterElt r = CharacterElt::monomial(rs.rho());
  for (const auto& beta : rs.positive_roots()) {
    CharacterElt next = r;
    for (const auto& [w, c] : r.terms()) next.add_term(w - beta, c);
    r = std::move(next);
  }
  return r;
}

BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("weyl_dimension requires a dominant weight");
  // prod (lambda + rho, beta) / (rho, beta); the coroot normalizations cancel.
  const Weight shifted = lambda + rs.rho();
  BigInt num = 1, den = 1;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    const auto& c = rs.positive_root_coords(static_cast<int>(k));
    num *= rs.inner_with_root(shifted, c);
    den *= rs.inner_with_root(rs.rho(), c);
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension not integral");
  return num / den;
}

CharacterElt tensor_character(const RootSystem& rs, const Weight& lambda,
                              const Weight& mu) {
  if (!lambda.is_dominant() || !mu.is_dominant())
    throw std::invalid_argument("tensor_character requires dominant weights");
  const CharacterElt ch_mu = irreducible_character(rs, mu);
  CharacterElt shifted(rs.rank());
  for (const auto& [w, c] : ch_mu.terms()) shifted.add_term(w + lambda, c);
  return demazure_word(rs, rs.w0_word(), shifted);
}

Decomposition decompose(const RootSystem& rs, const CharacterElt& a) {
  if (a.rank() != rs.rank())
    throw std::invalid_argument("character rank does not match root system");
  if (!is_weyl_invariant(rs, a))
    throw std::invalid_argument("decompose requires a W-invariant character");
  Decomposition d;
  CharacterElt remainder = a;
  while (!remainder.is_zero()) {
    // Leading term: dominant key maximal by (height, lex).
    bool found = false;
    Weight lead;
    std::int64_t lead_height = 0;
    for (const auto& [w, c] : remainder.terms()) {
      if (!w.is_dominant()) continue;
      const auto h = rs.height_key(w);
      if (!found || h > lead_height || (h == lead_height && lead < w)) {
        lead = w;
        lead_height = h;
        found = true;
      }
    }
    if (!found)
      throw std::logic_error("nonzero remainder without dominant term");
    const std::int64_t mult = remainder.coeff(lead);
    d.add(lead, mult);
    remainder -= irreducible_character(rs, lead).scaled(mult);
  }
  return d;
}

CharacterElt reconstruct(const RootSystem& rs, const Decomposition& d) {
  CharacterElt total(rs.rank());
  for (const auto& [w, m] : d.parts())
    total += irreducible_character(rs, w).scaled(m);
  return total;
}

CharacterElt freudenthal_character(const RootSystem& rs, const Weight& lambda) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("freudenthal_character requires a dominant weight");
  // Dominant weights of V(lambda), highest first.
  const std::vector<Weight> dominant = rs.dominant_below(lambda);
  std::unordered_map<Weight, std::int64_t, WeightHash> mult;
  const Weight two_rho = rs.two_rho();
  for (const auto& mu : dominant) {
    if (mu == lambda) {
      mult.emplace(mu, 1);
      continue;
    }
    std::int64_t numerator = 0;
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
      const Weight& beta = rs.positive_roots()[k];
      const auto& bc = rs.positive_root_coords(static_cast<int>(k));
      const std::int64_t beta_norm = 2 * rs.half_norm(bc);
      Weight nu = mu;
      for (std::int64_t step = 1;; ++step) {
        nu = nu + beta;
        auto it = mult.find(rs.make_dominant(nu));
        if (it == mult.end()) break;
        // (mu + step*beta, beta)
        const std::int64_t ip =
            checked_add(rs.inner_with_root(mu, bc), checked_mul(step, beta_norm));
        numerator = checked_add(numerator, checked_mul(it->second, ip));
      }
    }
    // (lambda + mu + 2rho, lambda - mu)
    const auto diff = rs.root_coords(lambda - mu);
    if (!diff) throw std::logic_error("weight outside lambda - Q+");
    const std::int64_t denom =
        rs.inner_with_root(lambda + mu + two_rho, *diff);
    const std::int64_t doubled = checked_mul(2, numerator);
    if (denom == 0 || doubled % denom != 0)
      throw std::logic_error("Freudenthal recursion is not integral");
    const std::int64_t m = doubled / denom;
    if (m != 0) mult.emplace(mu, m);
  }
  CharacterElt ch(rs.rank());
  for (const auto& [mu, m] : mult)
    for (const auto& w : rs.orbit(mu)) ch.add_term(w, m);
  return ch;
}

}  // namespace polyvec
