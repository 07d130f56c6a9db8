#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyvec/character.hpp"

using namespace polyvec;

namespace {

CharacterElt random_character(std::mt19937& rng, int rank) {
  std::uniform_int_distribution<std::int64_t> coord(-4, 4), coeff(-3, 3);
  std::uniform_int_distribution<int> nterms(1, 6);
  CharacterElt c(rank);
  const int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(rank));
    for (auto& x : v) x = coord(rng);
    c.add_term(Weight(v), coeff(rng));
  }
  return c;
}

/// (1 - e^{-alpha_i}) * D_i(a) == a - e^{-alpha_i} s_i(a); the defining
/// quotient, multiplied back to avoid division.
bool quotient_identity(const RootSystem& rs, int i, const CharacterElt& a) {
  const Weight& alpha = rs.simple_roots()[static_cast<std::size_t>(i - 1)];
  const CharacterElt d = demazure_apply(rs, i, a);
  CharacterElt lhs = d;
  for (const auto& [w, c] : d.terms()) lhs.add_term(w - alpha, -c);
  CharacterElt rhs = a;
  const CharacterElt refl = reflect(rs, i, a);
  for (const auto& [w, c] : refl.terms()) rhs.add_term(w - alpha, -c);
  return lhs == rhs;
}

}  // namespace

TEST_CASE("product basics") {
  CharacterElt f(1);
  f.add_term(Weight{1}, 1);
  f.add_term(Weight{-1}, 1);
  const CharacterElt sq = char_mul(f, f);
  CHECK(sq.coeff(Weight{2}) == 1);
  CHECK(sq.coeff(Weight{0}) == 2);
  CHECK(sq.coeff(Weight{-2}) == 1);
  CHECK(sq.term_count() == 3);

  const CharacterElt one = CharacterElt::monomial(Weight{0});
  CHECK(char_mul(f, one) == f);

  CharacterElt other(2);
  CHECK_THROWS_AS(char_mul(f, other), std::invalid_argument);
}

TEST_CASE("product is commutative and distributive on random triples") {
  std::mt19937 rng(17);
  for (int n = 0; n < 100; ++n) {
    const auto a = random_character(rng, 2);
    const auto b = random_character(rng, 2);
    const auto c = random_character(rng, 2);
    CHECK(char_mul(a, b) == char_mul(b, a));
    CHECK(char_mul(a, b + c) == char_mul(a, b) + char_mul(a, c));
  }
}

TEST_CASE("diamond involution") {
  CharacterElt a(2);
  a.add_term(Weight{1, 0}, 2);
  a.add_term(Weight{0, -1}, -1);
  const CharacterElt d = diamond(a);
  CHECK(d.coeff(Weight{-1, 0}) == 2);
  CHECK(d.coeff(Weight{0, 1}) == -1);
  CHECK(diamond(d) == a);
  CHECK(diamond(CharacterElt::monomial(Weight{0, 0})) ==
        CharacterElt::monomial(Weight{0, 0}));
}

TEST_CASE("diamond is a ring homomorphism on random pairs") {
  std::mt19937 rng(23);
  for (int n = 0; n < 100; ++n) {
    const auto a = random_character(rng, 2);
    const auto b = random_character(rng, 2);
    CHECK(diamond(char_mul(a, b)) == char_mul(diamond(a), diamond(b)));
  }
}

TEST_CASE("Demazure closed form in rank one") {
  const auto rs = RootSystem::build('A', 1);
  CharacterElt e1 = CharacterElt::monomial(Weight{1});
  CharacterElt d = demazure_apply(rs, 1, e1);
  CHECK(d.coeff(Weight{1}) == 1);
  CHECK(d.coeff(Weight{-1}) == 1);
  CHECK(d.term_count() == 2);

  CHECK(demazure_apply(rs, 1, CharacterElt::monomial(Weight{-1})).is_zero());

  // (e^-2 - e^0)/(1 - e^-2) = -1
  const CharacterElt d2 = demazure_apply(rs, 1, CharacterElt::monomial(Weight{-2}));
  CHECK(d2 == CharacterElt::monomial(Weight{0}).scaled(-1));

  CHECK_THROWS_AS(demazure_apply(rs, 2, e1), std::invalid_argument);
}

TEST_CASE("Demazure word on e^rho in A2") {
  const auto rs = RootSystem::build('A', 2);
  const CharacterElt e_rho = CharacterElt::monomial(rs.rho());
  const std::vector<int> w121 = {1, 2, 1}, w212 = {2, 1, 2};
  const CharacterElt adjoint = demazure_word(rs, w121, e_rho);
  CHECK(adjoint.total_dimension() == 8);
  CHECK(adjoint.coeff(Weight{0, 0}) == 2);
  CHECK(adjoint == demazure_word(rs, w212, e_rho));
  CHECK(demazure_word(rs, rs.w0_word(), CharacterElt::monomial(Weight{0, 0})) ==
        CharacterElt::monomial(Weight{0, 0}));
}

TEST_CASE("Demazure operators are idempotent on random characters") {
  std::mt19937 rng(31);
  for (int rank = 1; rank <= 3; ++rank) {
    const auto rs = RootSystem::build('A', rank);
    for (int n = 0; n < 50; ++n) {
      const auto a = random_character(rng, rank);
      for (int i = 1; i <= rank; ++i) {
        const auto once = demazure_apply(rs, i, a);
        CHECK(demazure_apply(rs, i, once) == once);
      }
    }
  }
}

TEST_CASE("defining quotient identity on random characters") {
  std::mt19937 rng(37);
  for (char t : {'A', 'B', 'G'}) {
    const auto rs = RootSystem::build(t, 2);
    for (int n = 0; n < 100; ++n) {
      const auto a = random_character(rng, 2);
      for (int i = 1; i <= 2; ++i) CHECK(quotient_identity(rs, i, a));
    }
  }
}

TEST_CASE("braid relations for the two reduced w0 words in rank 2") {
  std::mt19937 rng(41);
  for (char t : {'A', 'B', 'G'}) {
    const auto rs = RootSystem::build(t, 2);
    std::vector<int> w1, w2;
    const int n = static_cast<int>(rs.positive_roots().size());
    for (int k = 0; k < n; ++k) {
      w1.push_back(k % 2 == 0 ? 1 : 2);
      w2.push_back(k % 2 == 0 ? 2 : 1);
    }
    for (int i = 0; i < 100; ++i) {
      const auto a = random_character(rng, 2);
      CHECK(demazure_word(rs, w1, a) == demazure_word(rs, w2, a));
    }
  }
}

TEST_CASE("canonical term order is lexicographic") {
  CharacterElt a(2);
  a.add_term(Weight{1, -1}, 3);
  a.add_term(Weight{0, 2}, 1);
  a.add_term(Weight{1, 0}, -2);
  const auto sorted = a.sorted_terms();
  REQUIRE(sorted.size() == 3);
  CHECK(sorted[0].first == Weight{0, 2});
  CHECK(sorted[1].first == Weight{1, -1});
  CHECK(sorted[2].first == Weight{1, 0});
}
