#include "polyvec/character.hpp"

#include <algorithm>

#include "polyvec/arith.hpp"

namespace polyvec {

void CharacterElt::add_term(const Weight& mu, std::int64_t coeff) {
  if (coeff == 0) return;
  if (mu.rank() != rank_)
    throw std::invalid_argument("term rank does not match character rank");
  auto [it, inserted] = terms_.try_emplace(mu, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt CharacterElt::total_dimension() const {
  BigInt total = 0;
  for (const auto& [w, c] : terms_) total += c;
  return total;
}

std::vector<std::pair<Weight, std::int64_t>> CharacterElt::sorted_terms() const {
  std::vector<std::pair<Weight, std::int64_t>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

CharacterElt& CharacterElt::operator+=(const CharacterElt& o) {
  if (rank_ != o.rank_) throw std::invalid_argument("character rank mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

CharacterElt& CharacterElt::operator-=(const CharacterElt& o) {
  if (rank_ != o.rank_) throw std::invalid_argument("character rank mismatch");
  for (const auto& [w, c] : o.terms_) add_term(w, checked_sub(0, c));
  return *this;
}

CharacterElt CharacterElt::operator+(const CharacterElt& o) const {
  CharacterElt r = *this;
  r += o;
  return r;
}

CharacterElt CharacterElt::operator-(const CharacterElt& o) const {
  CharacterElt r = *this;
  r -= o;
  return r;
}

CharacterElt CharacterElt::scaled(std::int64_t k) const {
  CharacterElt r(rank_);
  if (k == 0) return r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, checked_mul(c, k));
  return r;
}

bool CharacterElt::operator==(const CharacterElt& o) const {
  if (rank_ != o.rank_ || terms_.size() != o.terms_.size()) return false;
  for (const auto& [w, c] : terms_) {
    auto it = o.terms_.find(w);
    if (it == o.terms_.end() || it->second != c) return false;
  }
  return true;
}

CharacterElt char_mul(const CharacterElt& a, const CharacterElt& b) {
  if (a.rank() != b.rank())
    throw std::invalid_argument("character rank mismatch in product");
  CharacterElt r(a.rank());
  const CharacterElt& small = a.term_count() <= b.term_count() ? a : b;
  const CharacterElt& large = a.term_count() <= b.term_count() ? b : a;
  r.reserve(large.term_count());
  for (const auto& [wa, ca] : small.terms())
    for (const auto& [wb, cb] : large.terms())
      r.add_term(wa + wb, checked_mul(ca, cb));
  return r;
}

CharacterElt diamond(const CharacterElt& a) {
  CharacterElt r(a.rank());
  r.reserve(a.term_count());
  for (const auto& [w, c] : a.terms()) r.add_term(-w, c);
  return r;
}

CharacterElt reflect(const RootSystem& rs, int i, const CharacterElt& a) {
  CharacterElt r(a.rank());
  r.reserve(a.term_count());
  for (const auto& [w, c] : a.terms()) r.add_term(rs.simple_reflection(i, w), c);
  return r;
}

CharacterElt demazure_apply(const RootSystem& rs, int i, const CharacterElt& a) {
  if (i < 1 || i > rs.rank())
    throw std::invalid_argument("Demazure operator index out of range");
  if (a.rank() != rs.rank())
    throw std::invalid_argument("character rank does not match root system");
  const Weight& alpha = rs.simple_roots()[static_cast<std::size_t>(i - 1)];
  CharacterElt r(a.rank());
  r.reserve(a.term_count() * 2);
  for (const auto& [w, c] : a.terms()) {
    const std::int64_t n = w[i - 1];
    if (n >= 0) {
      Weight v = w;
      for (std::int64_t k = 0; k <= n; ++k) {
        r.add_term(v, c);
        v = v - alpha;
      }
    } else if (n <= -2) {
      Weight v = w + alpha;
      for (std::int64_t k = 1; k <= -n - 1; ++k) {
        r.add_term(v, checked_sub(0, c));
        v = v + alpha;
      }
    }
    // n == -1: the monomial is killed.
  }
  return r;
}

CharacterElt demazure_word(const RootSystem& rs, std::span<const int> word,
                           const CharacterElt& a) {
  CharacterElt r = a;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    r = demazure_apply(rs, *it, r);
  return r;
}

bool is_weyl_invariant(const RootSystem& rs, const CharacterElt& a) {
  for (int i = 1; i <= rs.rank(); ++i) {
    for (const auto& [w, c] : a.terms()) {
      if (a.coeff(rs.simple_reflection(i, w)) != c) return false;
    }
  }
  return true;
}

}  // namespace polyvec
