#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "alcove_cells/errors.hpp"

namespace alcove_cells {

/// Weakly decreasing positive parts. No zero parts are stored; the total is
/// the ambient n+1 (1-padding is part of the canonical form).
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] < 1) throw PreconditionError("partition parts must be positive");
      if (k > 0 && parts_[k] > parts_[k - 1]) throw PreconditionError("partition parts must be weakly decreasing");
    }
  }

  /// Sorts and pads `parts` with 1's up to `total`.
  static Partition padded(std::vector<int> parts, int total) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    int sum = 0;
    for (int x : parts) sum += x;
    if (sum > total) throw PreconditionError("parts exceed total");
    parts.insert(parts.end(), static_cast<std::size_t>(total - sum), 1);
    return Partition(std::move(parts));
  }

  /// The partition (1, ..., 1) of total.
  static Partition trivial(int total) { return Partition(std::vector<int>(static_cast<std::size_t>(total), 1)); }

  const std::vector<int>& parts() const { return parts_; }
  int total() const {
    int s = 0;
    for (int x : parts_) s += x;
    return s;
  }
  std::size_t length() const { return parts_.size(); }
  /// k-th part (1-based), zero beyond the length.
  int part(std::size_t k) const { return k <= parts_.size() ? parts_[k - 1] : 0; }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// "4+2"
inline std::string to_string(const Partition& a) {
  std::string s;
  for (std::size_t k = 0; k < a.parts().size(); ++k) {
    if (k) s += "+";
    s += std::to_string(a.parts()[k]);
  }
  return s;
}

/// Accepts "4+2", "4,2" and "[4,2]".
inline Partition parse_partition(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("unterminated partition '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= body.size()) {
    auto stop = body.find_first_of("+,", start);
    if (stop == std::string_view::npos) stop = body.size();
    auto tok = body.substr(start, stop - start);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ParseError("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(std::stoi(std::string(tok)));
    start = stop + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const PreconditionError& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

namespace detail {

inline void check_same_total(const Partition& a, const Partition& b) {
  if (a.total() != b.total()) {
    throw IncompatiblePartitions("partitions " + to_string(a) + " and " + to_string(b) + " have different totals");
  }
}

inline std::vector<int> prefix_sums(const Partition& a, std::size_t len) {
  std::vector<int> s(len);
  int acc = 0;
  for (std::size_t k = 0; k < len; ++k) {
    acc += a.part(k + 1);
    s[k] = acc;
  }
  return s;
}

}  // namespace detail

/// Dominance order: every prefix sum of a is at most that of b.
inline bool dominance_leq(const Partition& a, const Partition& b) {
  detail::check_same_total(a, b);
  const auto len = static_cast<std::size_t>(a.total());
  const auto sa = detail::prefix_sums(a, len);
  const auto sb = detail::prefix_sums(b, len);
  for (std::size_t k = 0; k < len; ++k)
    if (sa[k] > sb[k]) return false;
  return true;
}

/// Conjugate partition (columns of the Young diagram).
inline Partition transpose(const Partition& a) {
  std::vector<int> cols;
  const int first = a.parts().empty() ? 0 : a.parts().front();
  for (int c = 1; c <= first; ++c) {
    int h = 0;
    for (int x : a.parts()) h += (x >= c);
    cols.push_back(h);
  }
  return Partition(std::move(cols));
}

/// Least upper bound for dominance. Pointwise maxima of prefix sums need not be
/// concave ((3,1,1,1) and (2,2,2) give (3,1,2)), so the join is the transpose of the
/// meet of transposes; pointwise minima of concave sequences stay concave.
inline Partition sup(std::span<const Partition> items) {
  if (items.empty()) throw PreconditionError("sup of an empty family");
  for (const auto& x : items) detail::check_same_total(items.front(), x);
  const auto len = static_cast<std::size_t>(items.front().total());
  std::vector<int> low = detail::prefix_sums(transpose(items.front()), len);
  for (const auto& x : items) {
    const auto s = detail::prefix_sums(transpose(x), len);
    for (std::size_t k = 0; k < len; ++k) low[k] = std::min(low[k], s[k]);
  }
  std::vector<int> parts;
  int prev = 0;
  for (std::size_t k = 0; k < len; ++k) {
    if (low[k] - prev > 0) parts.push_back(low[k] - prev);
    prev = low[k];
  }
  return transpose(Partition(std::move(parts)));
}

inline Partition sup(std::initializer_list<Partition> items) {
  return sup(std::span<const Partition>(items.begin(), items.size()));
}

/// Nilpotent orbit O_pi of sl_{n+1} with its dimension (n+1)^2 - sum (pi^t_k)^2.
struct OrbitLabel {
  Partition partition;
  int dim = 0;
};

inline OrbitLabel orbit_label(const Partition& a) {
  const int total = a.total();
  int sq = 0;
  const Partition cols = transpose(a);
  for (int c : cols.parts()) sq += c * c;
  return {a, total * total - sq};
}

/// All partitions of total, in reverse lexicographic order ((total) first).
inline std::vector<Partition> partitions_of(int total) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int x = std::min(remaining, cap); x >= 1; --x) {
      cur.push_back(x);
      self(self, remaining - x, x);
      cur.pop_back();
    }
  };
  if (total >= 1) rec(rec, total, total);
  return out;
}

}  // namespace alcove_cells
