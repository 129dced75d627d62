#pragma once

// Type A_n root system primitives. Points are always carried as lambda + rho
// in fundamental-weight coordinates; pairings are with roots (= coroots).

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "alcove_cells/errors.hpp"
#include "alcove_cells/rational.hpp"

namespace alcove_cells {

/// Positive root eps_i - eps_j, 1 <= i < j <= n+1. Ordered lexicographically
/// by (i, j), which is the canonical root order used everywhere.
struct RootA {
  int i = 1;
  int j = 2;

  constexpr int height() const { return j - i; }
  constexpr bool is_simple() const { return j == i + 1; }
  friend constexpr auto operator<=>(const RootA&, const RootA&) = default;
};

inline std::string to_string(const RootA& r) {
  return "(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")";
}

/// Throws InvalidRoot unless r is a positive root of A_rank.
inline void check_root(const RootA& r, int rank) {
  if (r.i < 1 || r.i >= r.j || r.j > rank + 1) {
    throw InvalidRoot("root " + to_string(r) + " is not a positive root of A_" +
                      std::to_string(rank));
  }
}

inline void check_rank(int rank) {
  if (rank < 1) throw InvalidRank("rank must be >= 1, got " + std::to_string(rank));
}

/// Number of positive roots of A_n.
constexpr std::size_t root_count(int rank) {
  return static_cast<std::size_t>(rank) * static_cast<std::size_t>(rank + 1) / 2;
}

/// Position of r in the canonical order of positive_roots(rank).
constexpr std::size_t root_index(const RootA& r, int rank) {
  std::size_t idx = 0;
  for (int a = 1; a < r.i; ++a) idx += static_cast<std::size_t>(rank + 1 - a);
  return idx + static_cast<std::size_t>(r.j - r.i - 1);
}

inline std::vector<RootA> positive_roots(int rank) {
  check_rank(rank);
  std::vector<RootA> out;
  out.reserve(root_count(rank));
  for (int i = 1; i <= rank; ++i)
    for (int j = i + 1; j <= rank + 1; ++j) out.push_back({i, j});
  return out;
}

/// Interval containment: (i,j) <= (k,l) iff k <= i and j <= l.
constexpr bool root_leq(const RootA& a, const RootA& b) { return b.i <= a.i && a.j <= b.j; }

/// <alpha, beta> for roots of A_n (both of squared length 2).
constexpr int root_inner(const RootA& a, const RootA& b) {
  return (a.i == b.i) - (a.i == b.j) - (a.j == b.i) + (a.j == b.j);
}

/// A not necessarily positive root eps_from - eps_to.
struct SignedRoot {
  int from = 1;
  int to = 2;

  constexpr bool is_positive() const { return from < to; }
  constexpr RootA positive() const {
    return is_positive() ? RootA{from, to} : RootA{to, from};
  }
  friend constexpr auto operator<=>(const SignedRoot&, const SignedRoot&) = default;
};

/// Fundamental-basis coordinates (a_1, ..., a_n) of lambda + rho.
class ShiftedPoint {
 public:
  ShiftedPoint() = default;
  explicit ShiftedPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    check_rank(rank());
  }

  /// lambda given in fundamental coordinates; adds rho = (1, ..., 1).
  static ShiftedPoint from_weight(std::span<const std::int64_t> weight) {
    std::vector<Rational> c;
    c.reserve(weight.size());
    for (auto w : weight) c.emplace_back(w + 1);
    return ShiftedPoint(std::move(c));
  }

  static ShiftedPoint from_ints(std::span<const std::int64_t> shifted) {
    std::vector<Rational> c(shifted.begin(), shifted.end());
    return ShiftedPoint(std::move(c));
  }

  int rank() const { return static_cast<int>(coords_.size()); }
  const std::vector<Rational>& coords() const { return coords_; }
  /// 1-based coordinate a_k.
  const Rational& operator[](int k) const { return coords_[static_cast<std::size_t>(k - 1)]; }

  bool is_integral() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return is_integer(r); });
  }

  friend bool operator==(const ShiftedPoint&, const ShiftedPoint&) = default;

 private:
  std::vector<Rational> coords_;
};

inline std::string to_string(const ShiftedPoint& pt) {
  std::string s = "(";
  for (int k = 1; k <= pt.rank(); ++k) {
    if (k > 1) s += ",";
    s += to_string(pt[k]);
  }
  return s + ")";
}

/// <lambda + rho, eps_i - eps_j> = a_i + ... + a_{j-1}.
inline Rational pairing(const ShiftedPoint& pt, const RootA& r) {
  check_root(r, pt.rank());
  Rational sum = 0;
  for (int k = r.i; k < r.j; ++k) sum += pt[k];
  return sum;
}

/// All pairings in canonical root order.
inline std::vector<Rational> pairings(const ShiftedPoint& pt) {
  const int n = pt.rank();
  std::vector<Rational> out;
  out.reserve(root_count(n));
  for (int i = 1; i <= n; ++i) {
    Rational sum = 0;
    for (int j = i + 1; j <= n + 1; ++j) {
      sum += pt[j - 1];
      out.push_back(sum);
    }
  }
  return out;
}

inline bool is_regular_dominant(const ShiftedPoint& pt) {
  return std::all_of(pt.coords().begin(), pt.coords().end(), [](const Rational& a) { return a > 0; });
}

/// eps-coordinates (x_1, ..., x_{n+1}) with x_{n+1} = 0 and x_k - x_{k+1} = a_k.
inline std::vector<Rational> to_epsilon(const ShiftedPoint& pt) {
  const int n = pt.rank();
  std::vector<Rational> x(static_cast<std::size_t>(n + 1));
  for (int k = n; k >= 1; --k) x[static_cast<std::size_t>(k - 1)] = x[static_cast<std::size_t>(k)] + pt[k];
  return x;
}

inline ShiftedPoint from_epsilon(std::span<const Rational> x) {
  std::vector<Rational> a;
  a.reserve(x.size() - 1);
  for (std::size_t k = 0; k + 1 < x.size(); ++k) a.push_back(x[k] - x[k + 1]);
  return ShiftedPoint(std::move(a));
}

/// Permutation w of {1, ..., n+1}; w(eps_i - eps_j) = eps_{w(i)} - eps_{w(j)}.
class WeylPerm {
 public:
  static WeylPerm identity(int rank) {
    check_rank(rank);
    std::vector<int> img(static_cast<std::size_t>(rank + 1));
    std::iota(img.begin(), img.end(), 1);
    return WeylPerm(std::move(img));
  }

  /// images[k-1] = w(k); must be a bijection of {1, ..., n+1}.
  explicit WeylPerm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<int> sorted = images_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      if (sorted[k] != static_cast<int>(k) + 1) throw PreconditionError("WeylPerm: not a permutation");
    }
    if (images_.size() < 2) throw InvalidRank("WeylPerm needs at least two letters");
  }

  int rank() const { return static_cast<int>(images_.size()) - 1; }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const { return images_; }

  SignedRoot apply(const RootA& r) const { return {(*this)(r.i), (*this)(r.j)}; }

  /// (this * other)(k) = this(other(k)).
  WeylPerm operator*(const WeylPerm& other) const {
    std::vector<int> img(images_.size());
    for (std::size_t k = 0; k < img.size(); ++k) img[k] = (*this)(other.images_[k]);
    return WeylPerm(std::move(img));
  }

  friend auto operator<=>(const WeylPerm&, const WeylPerm&) = default;

 private:
  std::vector<int> images_;
};

}  // namespace alcove_cells
