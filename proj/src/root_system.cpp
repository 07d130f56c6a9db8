#include "polyvec/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace polyvec {

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

Matrix cartan_matrix(char type, int rank) {
  const auto n = static_cast<std::size_t>(rank);
  Matrix a(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](std::size_t i, std::size_t j) { a[i][j] = a[j][i] = -1; };
  auto chain = [&](std::size_t upto) {
    for (std::size_t i = 0; i + 1 < upto; ++i) link(i, i + 1);
  };
  switch (type) {
    case 'A':
      require(rank >= 1, "type A requires rank >= 1");
      chain(n);
      break;
    case 'B':
      require(rank >= 2, "type B requires rank >= 2");
      chain(n);
      a[n - 1][n - 2] = -2;  // alpha_l short
      break;
    case 'C':
      require(rank >= 3, "type C requires rank >= 3");
      chain(n);
      a[n - 2][n - 1] = -2;  // alpha_l long
      break;
    case 'D':
      require(rank >= 4, "type D requires rank >= 4");
      chain(n - 1);
      link(n - 3, n - 1);
      break;
    case 'E': {
      require(rank >= 6 && rank <= 8, "type E requires rank in {6,7,8}");
      // Bourbaki: chain 1-3-4-5-...-l, node 2 attached to node 4.
      link(0, 2);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      link(1, 3);
      break;
    }
    case 'F':
      require(rank == 4, "type F requires rank 4");
      chain(n);
      a[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case 'G':
      require(rank == 2, "type G requires rank 2");
      a[0][1] = -3;  // alpha_1 short
      a[1][0] = -1;
      break;
    default:
      require(false, std::string("unknown type label '") + type + "'");
  }
  return a;
}

std::int64_t det_recursive(const Matrix& m, std::vector<int>& cols, int row) {
  const int n = static_cast<int>(m.size());
  if (row == n) return 1;
  std::int64_t det = 0;
  int sign = 1;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const int c = cols[k];
    if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] != 0) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
      const std::int64_t sub = det_recursive(m, cols, row + 1);
      det = checked_add(det,
                        checked_mul(sign * m[static_cast<std::size_t>(row)]
                                              [static_cast<std::size_t>(c)],
                                    sub));
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    }
    sign = -sign;
  }
  return det;
}

std::int64_t determinant(const Matrix& m) {
  std::vector<int> cols(m.size());
  std::iota(cols.begin(), cols.end(), 0);
  return det_recursive(m, cols, 0);
}

Matrix adjugate(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  Matrix adj(static_cast<std::size_t>(n),
             std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  if (n == 1) {
    adj[0][0] = 1;
    return adj;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Matrix minor;
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<std::int64_t> row;
        for (int c = 0; c < n; ++c) {
          if (c == j) continue;
          row.push_back(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        }
        minor.push_back(std::move(row));
      }
      const std::int64_t cof = ((i + j) % 2 ? -1 : 1) * determinant(minor);
      adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = cof;
    }
  }
  return adj;
}

/// Minimal positive integers d with d_i a_ij = d_j a_ji.
std::vector<std::int64_t> symmetrizers(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::int64_t> num(static_cast<std::size_t>(n), 0),
      den(static_cast<std::size_t>(n), 1);
  num[0] = 1;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      const auto ij = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const auto ji = a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (i == j || ij == 0 || num[static_cast<std::size_t>(j)] != 0) continue;
      // d_j = d_i * a_ij / a_ji
      num[static_cast<std::size_t>(j)] = num[static_cast<std::size_t>(i)] * ij;
      den[static_cast<std::size_t>(j)] = den[static_cast<std::size_t>(i)] * ji;
      if (den[static_cast<std::size_t>(j)] < 0) {
        num[static_cast<std::size_t>(j)] = -num[static_cast<std::size_t>(j)];
        den[static_cast<std::size_t>(j)] = -den[static_cast<std::size_t>(j)];
      }
      queue.push_back(j);
    }
  }
  std::int64_t l = 1;
  for (int i = 0; i < n; ++i) l = std::lcm(l, den[static_cast<std::size_t>(i)]);
  std::vector<std::int64_t> d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    d[static_cast<std::size_t>(i)] =
        num[static_cast<std::size_t>(i)] * (l / den[static_cast<std::size_t>(i)]);
  std::int64_t g = 0;
  for (auto v : d) g = std::gcd(g, v);
  for (auto& v : d) v /= g;
  return d;
}

}  // namespace

RootSystem RootSystem::build(char type_label, int rank) {
  RootSystem rs;
  rs.type_ = type_label;
  rs.rank_ = rank;
  rs.cartan_ = cartan_matrix(type_label, rank);
  rs.cartan_det_ = determinant(rs.cartan_);
  rs.adjugate_ = adjugate(rs.cartan_);
  rs.sym_ = symmetrizers(rs.cartan_);

  const auto n = static_cast<std::size_t>(rank);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::int64_t> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = rs.cartan_[i][j];
    rs.simple_roots_.emplace_back(col);
  }

  // Closure of the simple roots: beta + alpha_i is a root iff the alpha_i
  // string through beta extends upward, i.e. p - <beta, alpha_i^vee> > 0
  // where p is the depth of the string below beta.
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::vector<std::int64_t>> roots;  // root-basis coords
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::int64_t> e(n, 0);
    e[j] = 1;
    roots.push_back(e);
    seen.insert(e);
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const auto beta = roots[k];
    for (std::size_t i = 0; i < n; ++i) {
      auto up = beta;
      up[i] += 1;
      if (seen.contains(up)) continue;
      std::int64_t pairing = 0;
      for (std::size_t j = 0; j < n; ++j) pairing += rs.cartan_[i][j] * beta[j];
      std::int64_t p = 0;
      auto down = beta;
      while (true) {
        down[i] -= 1;
        bool nonneg = true;
        for (auto c : down) nonneg = nonneg && c >= 0;
        if (!nonneg || !seen.contains(down)) break;
        ++p;
      }
      if (p - pairing > 0) {
        roots.push_back(up);
        seen.insert(up);
      }
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const auto& a, const auto& b) {
              const auto ha = std::accumulate(a.begin(), a.end(), std::int64_t{0});
              const auto hb = std::accumulate(b.begin(), b.end(), std::int64_t{0});
              return ha != hb ? ha < hb : a < b;
            });
  for (const auto& c : roots) {
    std::vector<std::int64_t> w(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i] += rs.cartan_[i][j] * c[j];
    rs.positive_roots_.emplace_back(w);
    rs.positive_root_coords_.push_back(c);
  }

  rs.rho_ = Weight(std::vector<std::int64_t>(n, 1));

  // Greedy descent from rho to -rho yields a reduced word for w0.
  Weight v = rs.rho_;
  const Weight neg_rho = -rs.rho_;
  while (!(v == neg_rho)) {
    int pick = -1;
    for (int i = 0; i < rank; ++i) {
      if (v[i] > 0) {
        pick = i;
        break;
      }
    }
    if (pick < 0) throw std::logic_error("descent stalled before -rho");
    v = rs.simple_reflection(pick + 1, v);
    rs.w0_word_.push_back(pick + 1);
  }
  if (rs.w0_word_.size() != rs.positive_roots_.size())
    throw std::logic_error("w0 word length differs from |Phi^+|");
  return rs;
}

void RootSystem::check_weight(const Weight& w) const {
  if (w.rank() != rank_)
    throw std::invalid_argument("weight rank does not match root system");
}

Weight RootSystem::simple_reflection(int i, const Weight& lambda) const {
  check_weight(lambda);
  if (i < 1 || i > rank_)
    throw std::invalid_argument("simple reflection index out of range");
  return lambda - simple_roots_[static_cast<std::size_t>(i - 1)]
                      .scaled(lambda[i - 1]);
}

Weight RootSystem::act(std::span<const int> word, const Weight& lambda) const {
  Weight v = lambda;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    v = simple_reflection(*it, v);
  return v;
}

Weight RootSystem::dot_act(std::span<const int> word, const Weight& lambda) const {
  return act(word, lambda + rho_) - rho_;
}

Weight RootSystem::make_dominant(const Weight& lambda) const {
  Weight v = lambda;
  check_weight(v);
  while (true) {
    int pick = -1;
    for (int i = 0; i < rank_; ++i) {
      if (v[i] < 0) {
        pick = i;
        break;
      }
    }
    if (pick < 0) return v;
    v = simple_reflection(pick + 1, v);
  }
}

bool RootSystem::dominance_leq(const Weight& lo, const Weight& hi) const {
  check_weight(lo);
  check_weight(hi);
  const Weight diff = hi - lo;
  for (int i = 0; i < rank_; ++i) {
    std::int64_t scaled = 0;
    for (int j = 0; j < rank_; ++j)
      scaled = checked_add(scaled, checked_mul(adjugate_[static_cast<std::size_t>(i)]
                                                        [static_cast<std::size_t>(j)],
                                               diff[j]));
    if (scaled < 0 || scaled % cartan_det_ != 0) return false;
  }
  return true;
}

std::optional<std::vector<std::int64_t>> RootSystem::root_coords(
    const Weight& lambda) const {
  check_weight(lambda);
  std::vector<std::int64_t> c(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    std::int64_t scaled = 0;
    for (int j = 0; j < rank_; ++j)
      scaled = checked_add(scaled, checked_mul(adjugate_[static_cast<std::size_t>(i)]
                                                        [static_cast<std::size_t>(j)],
                                               lambda[j]));
    if (scaled % cartan_det_ != 0) return std::nullopt;
    c[static_cast<std::size_t>(i)] = scaled / cartan_det_;
  }
  return c;
}

std::int64_t RootSystem::height_key(const Weight& lambda) const {
  check_weight(lambda);
  std::int64_t total = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      total = checked_add(total, checked_mul(adjugate_[static_cast<std::size_t>(i)]
                                                      [static_cast<std::size_t>(j)],
                                             lambda[j]));
  return total;
}

Weight RootSystem::dual(const Weight& lambda) const {
  return -act(w0_word_, lambda);
}

std::vector<Weight> RootSystem::dominant_below(const Weight& mu) const {
  check_weight(mu);
  if (!mu.is_dominant())
    throw std::invalid_argument("dominant_below requires a dominant weight");
  // For dominant lambda <= mu the root coefficients of mu - lambda are
  // bounded by those of C^{-1} mu, since C^{-1} lambda is componentwise >= 0.
  std::vector<std::int64_t> bound(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    std::int64_t scaled = 0;
    for (int j = 0; j < rank_; ++j)
      scaled += adjugate_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                mu[j];
    bound[static_cast<std::size_t>(i)] = scaled / cartan_det_;
  }
  std::vector<Weight> result;
  std::unordered_set<Weight, WeightHash> visited;
  std::deque<std::pair<Weight, Weight>> queue;  // (c vector, lambda)
  const Weight c0 = Weight::zero(rank_);
  queue.emplace_back(c0, mu);
  visited.insert(c0);
  while (!queue.empty()) {
    auto [c, lambda] = queue.front();
    queue.pop_front();
    if (lambda.is_dominant()) result.push_back(lambda);
    for (int i = 0; i < rank_; ++i) {
      if (c[i] >= bound[static_cast<std::size_t>(i)]) continue;
      Weight c2 = c;
      c2[i] += 1;
      if (!visited.insert(c2).second) continue;
      queue.emplace_back(c2, lambda - simple_roots_[static_cast<std::size_t>(i)]);
    }
  }
  std::sort(result.begin(), result.end(), [this](const Weight& a, const Weight& b) {
    const auto ha = height_key(a), hb = height_key(b);
    return ha != hb ? ha > hb : a < b;
  });
  return result;
}

std::int64_t RootSystem::inner_with_root(
    const Weight& lambda, std::span<const std::int64_t> beta_coords) const {
  check_weight(lambda);
  std::int64_t total = 0;
  for (int j = 0; j < rank_; ++j)
    total = checked_add(
        total, checked_mul(checked_mul(sym_[static_cast<std::size_t>(j)],
                                       beta_coords[static_cast<std::size_t>(j)]),
                           lambda[j]));
  return total;
}

std::int64_t RootSystem::half_norm(std::span<const std::int64_t> beta_coords) const {
  std::int64_t total = 0;
  for (int j = 0; j < rank_; ++j)
    for (int k = 0; k < rank_; ++k)
      total = checked_add(
          total,
          checked_mul(checked_mul(beta_coords[static_cast<std::size_t>(j)],
                                  beta_coords[static_cast<std::size_t>(k)]),
                      checked_mul(sym_[static_cast<std::size_t>(j)],
                                  cartan_[static_cast<std::size_t>(j)]
                                         [static_cast<std::size_t>(k)])));
  if (total % 2 != 0) throw std::logic_error("odd root norm");
  return total / 2;
}

std::vector<Weight> RootSystem::orbit(const Weight& lambda) const {
  std::unordered_set<Weight, WeightHash> seen{lambda};
  std::deque<Weight> queue{lambda};
  std::vector<Weight> result;
  while (!queue.empty()) {
    Weight v = queue.front();
    queue.pop_front();
    result.push_back(v);
    for (int i = 1; i <= rank_; ++i) {
      Weight w = simple_reflection(i, v);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return result;
}

}  // namespace polyvec
