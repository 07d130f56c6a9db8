// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the exit status is the number of failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "polyvec/flag_cohomology.hpp"

using namespace polyvec;

namespace {

int failures = 0;

void criterion(int number, const std::string& label,
               const std::function<bool()>& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": "
            << label << " (" << seconds << " s)";
  if (!error.empty()) std::cout << " -- " << error;
  std::cout << "\n" << std::flush;
  if (!ok) ++failures;
}

double run_timed(const std::function<bool()>& body, bool& ok) {
  const auto start = std::chrono::steady_clock::now();
  ok = body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

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

Weight random_weight(std::mt19937& rng, int rank) {
  std::uniform_int_distribution<std::int64_t> dist(-5, 5);
  std::vector<std::int64_t> c(static_cast<std::size_t>(rank));
  for (auto& v : c) v = dist(rng);
  return Weight(c);
}

std::vector<Weight> dominant_box(int rank, std::int64_t max_coord) {
  std::vector<Weight> out;
  std::vector<std::int64_t> c(static_cast<std::size_t>(rank), 0);
  while (true) {
    out.emplace_back(c);
    int i = 0;
    while (i < rank && c[static_cast<std::size_t>(i)] == max_coord) {
      c[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == rank) return out;
    ++c[static_cast<std::size_t>(i)];
  }
}

void all_reduced_words_rec(const RootSystem& rs, Weight v, WeylWord& path,
                           std::vector<WeylWord>& out) {
  bool terminal = true;
  for (int i = 1; i <= rs.rank(); ++i) {
    if (v[i - 1] > 0) {
      terminal = false;
      path.push_back(i);
      all_reduced_words_rec(rs, rs.simple_reflection(i, v), path, out);
      path.pop_back();
    }
  }
  if (terminal) out.push_back(path);
}

/// All reduced words of w0, as maximal descent paths from rho to -rho.
std::vector<WeylWord> all_reduced_words(const RootSystem& rs) {
  std::vector<WeylWord> out;
  WeylWord path;
  all_reduced_words_rec(rs, rs.rho(), path, out);
  return out;
}

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

const std::vector<std::pair<char, int>> kRankLe4 = {
    {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'B', 4},
    {'C', 3}, {'C', 4}, {'D', 4}, {'G', 2}, {'F', 4}};

}  // namespace

int main() {
  criterion(1, "SL3 golden polyvector decomposition, < 1 s", [] {
    bool ok = false;
    const double t = run_timed(
        [&] {
          const auto rs = RootSystem::build('A', 2);
          const Decomposition d = polyvector_euler_decomposition(rs);
          Decomposition expected;
          expected.add(Weight{0, 0}, 1);
          expected.add(Weight{1, 1}, 2);
          expected.add(Weight{3, 0}, 1);
          expected.add(Weight{0, 3}, 1);
          expected.add(Weight{2, 2}, 1);
          return d == expected;
        },
        ok);
    return ok && t < 1.0;
  });

  criterion(2, "D4 tensor square has 648 components and matches chi_T, < 300 s", [] {
    bool ok = false;
    const double t = run_timed(
        [&] {
          const auto rs = RootSystem::build('D', 4);
          const Decomposition tensor =
              decompose(rs, tensor_character(rs, rs.rho(), rs.rho()));
          if (tensor.multiplicity_sum() != 648) return false;
          return polyvector_euler_decomposition(rs) == tensor;
        },
        ok);
    return ok && t < 300.0;
  });

  criterion(3, "Kostant verification across A1-A4, B2, B3, C3, D4, G2, F4", [] {
    const std::vector<std::pair<char, int>> types = {
        {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2},
        {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}};
    bool all_ok = true;
    for (auto [t, r] : types) {
      const auto rs = RootSystem::build(t, r);
      bool holds = false;
      const double seconds = run_timed(
          [&] {
            const KostantReport report = verify_kostant(rs);
            if (!report.conjecture_holds) {
              std::cout << "  counterexamples in " << rs.name() << ":";
              for (const auto& w : report.counterexamples)
                std::cout << " " << w.to_string();
              std::cout << "\n";
            }
            return report.conjecture_holds;
          },
          holds);
      const double budget = (t == 'F') ? 3600.0 : 300.0;
      std::cout << "  " << rs.name() << ": "
                << (holds ? "conjecture holds" : "MISMATCH") << " ("
                << seconds << " s)\n";
      all_ok = all_ok && holds && seconds < budget;
    }
    return all_ok;
  });

  criterion(4, "D_w0(ch ext n) = (ch V(rho))^2 for every type of rank <= 4", [] {
    for (auto [t, r] : kRankLe4) {
      const auto rs = RootSystem::build(t, r);
      const CharacterElt lhs =
          demazure_word(rs, rs.w0_word(), exterior_character(rs, true).total());
      const CharacterElt rho_ch = rho_character(rs);
      if (!(lhs == char_mul(rho_ch, rho_ch))) return false;
    }
    return true;
  });

  criterion(5, "Demazure idempotence, quotient identity, braid relations", [] {
    std::mt19937 rng(101);
    for (auto [t, r] : std::vector<std::pair<char, int>>{
             {'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}, {'B', 3}, {'C', 3}}) {
      const auto rs = RootSystem::build(t, r);
      for (int n = 0; n < 100; ++n) {
        const auto a = random_character(rng, r);
        for (int i = 1; i <= r; ++i) {
          const auto once = demazure_apply(rs, i, a);
          if (!(demazure_apply(rs, i, once) == once)) return false;
          if (!quotient_identity(rs, i, a)) return false;
        }
      }
    }
    for (char t : {'A', 'B', 'G'}) {
      const auto rs = RootSystem::build(t, 2);
      const auto words = all_reduced_words(rs);
      if (words.size() < 2) return false;
      for (int n = 0; n < 100; ++n) {
        const auto a = random_character(rng, 2);
        const auto reference = demazure_word(rs, words.front(), a);
        for (std::size_t k = 1; k < words.size(); ++k)
          if (!(demazure_word(rs, words[k], a) == reference)) return false;
      }
    }
    return true;
  });

  criterion(6, "Demazure and Freudenthal characters agree on coords <= 2", [] {
    for (auto [t, r] : std::vector<std::pair<char, int>>{
             {'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}}) {
      const auto rs = RootSystem::build(t, r);
      for (const auto& lambda : dominant_box(r, 2))
        if (!(freudenthal_character(rs, lambda) ==
              irreducible_character(rs, lambda)))
          return false;
    }
    return true;
  });

  criterion(7, "BWB triple and Euler consistency on random line bundles", [] {
    const auto a1 = RootSystem::build('A', 1);
    if (!(bwb_line_bundle(a1, Weight{2}) == BwbResult::cohomology(0, Weight{2})))
      return false;
    if (!bwb_line_bundle(a1, Weight{-1}).vanishes) return false;
    if (!(bwb_line_bundle(a1, Weight{-2}) == BwbResult::cohomology(1, Weight{0})))
      return false;

    std::mt19937 rng(103);
    for (auto [t, r] : std::vector<std::pair<char, int>>{
             {'A', 1}, {'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}, {'B', 3},
             {'C', 3}}) {
      const auto rs = RootSystem::build(t, r);
      for (int n = 0; n < 1000; ++n) {
        const Weight lambda = random_weight(rng, r);
        const CharacterElt chi =
            euler_characteristic(rs, CharacterElt::monomial(-lambda));
        const BwbResult res = bwb_line_bundle(rs, lambda);
        if (res.vanishes) {
          if (!chi.is_zero()) return false;
        } else {
          const CharacterElt expected =
              diamond(irreducible_character(rs, res.dual_highest_weight))
                  .scaled(res.degree % 2 == 0 ? 1 : -1);
          if (!(chi == expected)) return false;
        }
      }
    }
    return true;
  });

  criterion(8, "Wahl formula matches chi_T of ext^{n-1} u", [] {
    for (auto [t, r] : std::vector<std::pair<char, int>>{
             {'A', 2}, {'B', 2}, {'A', 3}}) {
      const auto rs = RootSystem::build(t, r);
      const int n = static_cast<int>(rs.positive_roots().size());
      const CharacterElt chi = euler_characteristic(
          rs,
          exterior_character(rs, false).by_degree[static_cast<std::size_t>(n - 1)]);
      if (!(chi == reconstruct(rs, wahl_h0(rs)))) return false;
    }
    Decomposition expected;
    expected.add(Weight{1, 1}, 1);
    expected.add(Weight{3, 0}, 1);
    expected.add(Weight{0, 3}, 1);
    return wahl_h0(RootSystem::build('A', 2)) == expected;
  });

  criterion(9, "chi_T of the tangent bundle is one adjoint copy", [] {
    for (auto [t, r] : kRankLe4) {
      const auto rs = RootSystem::build(t, r);
      const CharacterElt chi =
          euler_characteristic(rs, exterior_character(rs, false).by_degree[1]);
      Decomposition expected;
      expected.add(rs.positive_roots().back(), 1);  // highest root
      if (!(decompose(rs, chi) == expected)) return false;
    }
    return true;
  });

  criterion(10, "dimension identities", [] {
    for (auto [t, r] : std::vector<std::pair<char, int>>{
             {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3},
             {'B', 4}, {'C', 3}, {'C', 4}, {'D', 4}, {'G', 2}, {'F', 4},
             {'E', 6}, {'E', 7}, {'E', 8}}) {
      const auto rs = RootSystem::build(t, r);
      if (weyl_dimension(rs, rs.rho()) != BigInt(1) << rs.positive_roots().size())
        return false;
    }
    const auto a2 = RootSystem::build('A', 2);
    const Decomposition da2 =
        decompose(a2, tensor_character(a2, a2.rho(), a2.rho()));
    BigInt total_a2 = 0;
    for (const auto& [w, m] : da2.parts())
      total_a2 += m * weyl_dimension(a2, w);
    if (total_a2 != 64) return false;

    const auto d4 = RootSystem::build('D', 4);
    const Decomposition dd4 =
        decompose(d4, tensor_character(d4, d4.rho(), d4.rho()));
    BigInt total_d4 = 0;
    for (const auto& [w, m] : dd4.parts())
      total_d4 += m * weyl_dimension(d4, w);
    return total_d4 == BigInt(4096) * 4096;
  });

  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures;
}
