#ifndef POLYVEC_WEIGHT_HPP
#define POLYVEC_WEIGHT_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyvec/arith.hpp"

namespace polyvec {

/// Ranks above 8 do not occur among the simple types.
inline constexpr int kMaxRank = 8;

/// Integral weight in fundamental-weight coordinates. Coordinate i is the
/// pairing with the i-th simple coroot.
class Weight {
 public:
  Weight() = default;

  explicit Weight(std::span<const std::int64_t> coords) {
    if (coords.size() > static_cast<std::size_t>(kMaxRank))
      throw std::invalid_argument("weight rank exceeds supported maximum");
    rank_ = static_cast<int>(coords.size());
    for (int i = 0; i < rank_; ++i) c_[i] = coords[i];
  }

  Weight(std::initializer_list<std::int64_t> coords)
      : Weight(std::span<const std::int64_t>(coords.begin(), coords.size())) {}

  explicit Weight(const std::vector<std::int64_t>& coords)
      : Weight(std::span<const std::int64_t>(coords.data(), coords.size())) {}

  static Weight zero(int rank) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(rank), 0);
    return Weight(v);
  }

  int rank() const { return rank_; }

  std::int64_t operator[](int i) const { return c_[i]; }
  std::int64_t& operator[](int i) { return c_[i]; }

  std::vector<std::int64_t> coords() const {
    return std::vector<std::int64_t>(c_.begin(), c_.begin() + rank_);
  }

  bool is_zero() const {
    for (int i = 0; i < rank_; ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  bool is_dominant() const {
    for (int i = 0; i < rank_; ++i)
      if (c_[i] < 0) return false;
    return true;
  }

  Weight operator+(const Weight& o) const {
    check_rank(o);
    Weight r = *this;
    for (int i = 0; i < rank_; ++i) r.c_[i] = checked_add(c_[i], o.c_[i]);
    return r;
  }

  Weight operator-(const Weight& o) const {
    check_rank(o);
    Weight r = *this;
    for (int i = 0; i < rank_; ++i) r.c_[i] = checked_sub(c_[i], o.c_[i]);
    return r;
  }

  Weight operator-() const {
    Weight r = *this;
    for (int i = 0; i < rank_; ++i) r.c_[i] = checked_sub(0, c_[i]);
    return r;
  }

  Weight scaled(std::int64_t k) const {
    Weight r = *this;
    for (int i = 0; i < rank_; ++i) r.c_[i] = checked_mul(c_[i], k);
    return r;
  }

  friend bool operator==(const Weight& a, const Weight& b) {
    if (a.rank_ != b.rank_) return false;
    for (int i = 0; i < a.rank_; ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }

  /// Lexicographic on coordinates; used for canonical orderings.
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (a.rank_ != b.rank_) return a.rank_ <=> b.rank_;
    for (int i = 0; i < a.rank_; ++i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::string s = "(";
    for (int i = 0; i < rank_; ++i) {
      if (i) s += ",";
      s += std::to_string(c_[i]);
    }
    s += ")";
    return s;
  }

 private:
  void check_rank(const Weight& o) const {
    if (rank_ != o.rank_)
      throw std::invalid_argument("weight rank mismatch");
  }

  int rank_ = 0;
  std::array<std::int64_t, kMaxRank> c_{};
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < w.rank(); ++i) {
      h ^= static_cast<std::uint64_t>(w[i]);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace polyvec

#endif
