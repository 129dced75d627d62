#pragma once

// Brute-force reference computations written without the library's shortcuts.
// Roots are handled as integer vectors in eps-coordinates; points as integral
// eps-coordinate vectors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "alcove_cells.hpp"

namespace oracle {

using Vec = std::vector<int>;
using alcove_cells::RootA;

inline Vec root_vector(const RootA& r, int n) {
  Vec v(static_cast<std::size_t>(n + 1), 0);
  v[static_cast<std::size_t>(r.i - 1)] = 1;
  v[static_cast<std::size_t>(r.j - 1)] = -1;
  return v;
}

inline int dot(const Vec& a, const Vec& b) {
  int s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

inline bool is_positive(const Vec& v) {
  for (int x : v)
    if (x != 0) return x > 0;
  return false;
}

/// Positive roots of the root subsystem generated by `roots` (closure under
/// the reflections s_a(b) = b - <b,a> a).
inline std::set<Vec> generated_positive(const std::vector<RootA>& roots, int n) {
  std::set<Vec> all;
  std::vector<Vec> gens;
  for (const auto& r : roots) {
    gens.push_back(root_vector(r, n));
    all.insert(gens.back());
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> cur(all.begin(), all.end());
    for (const auto& a : cur) {
      for (const auto& b : cur) {
        Vec c = b;
        const int m = dot(b, a);
        for (std::size_t k = 0; k < c.size(); ++k) c[k] -= m * a[k];
        Vec neg = c;
        for (auto& x : neg) x = -x;
        if (all.insert(c).second) grew = true;
        if (all.insert(neg).second) grew = true;
      }
    }
  }
  std::set<Vec> pos;
  for (const auto& v : all)
    if (is_positive(v)) pos.insert(v);
  return pos;
}

/// Simple roots of a positive system: elements not a sum of two others.
inline std::set<Vec> simple_of(const std::set<Vec>& pos) {
  std::set<Vec> out;
  for (const auto& v : pos) {
    bool decomposable = false;
    for (const auto& a : pos) {
      Vec b = v;
      for (std::size_t k = 0; k < b.size(); ++k) b[k] -= a[k];
      if (pos.count(b)) decomposable = true;
    }
    if (!decomposable) out.insert(v);
  }
  return out;
}

/// `roots` is the simple system of the positive system it generates.
inline bool is_basis(const std::vector<RootA>& roots, int n) {
  std::set<Vec> given;
  for (const auto& r : roots) given.insert(root_vector(r, n));
  if (given.size() != roots.size()) return false;
  return simple_of(generated_positive(roots, n)) == given;
}

inline std::vector<RootA> positive_system(const std::vector<RootA>& roots, int n) {
  std::vector<RootA> out;
  for (const auto& v : generated_positive(roots, n)) {
    int i = 0, j = 0;
    for (int k = 0; k <= n; ++k) {
      if (v[static_cast<std::size_t>(k)] == 1) i = k + 1;
      if (v[static_cast<std::size_t>(k)] == -1) j = k + 1;
    }
    out.push_back({i, j});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Sizes of the connected components of {1..n+1} with an edge per root.
inline alcove_cells::Partition component_partition(const std::vector<RootA>& roots, int n) {
  std::vector<int> parent(static_cast<std::size_t>(n + 2));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const auto& r : roots) parent[static_cast<std::size_t>(find(r.i))] = find(r.j);
  std::map<int, int> sizes;
  for (int k = 1; k <= n + 1; ++k) ++sizes[find(k)];
  std::vector<int> parts;
  for (auto [root, size] : sizes) parts.push_back(size);
  std::sort(parts.rbegin(), parts.rend());
  return alcove_cells::Partition(parts);
}

/// eps-coordinates of an integral shifted point, x_{n+1} = 0.
inline std::vector<std::int64_t> epsilon(const std::vector<std::int64_t>& a) {
  std::vector<std::int64_t> x(a.size() + 1, 0);
  for (std::size_t k = a.size(); k-- > 0;) x[k] = x[k + 1] + a[k];
  return x;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Alcove indices from eps-differences: floor((x_i - x_j)/p) + 1.
inline std::vector<std::int64_t> alcove_indices(const std::vector<std::int64_t>& a, std::int64_t p) {
  const auto x = epsilon(a);
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) out.push_back(floor_div(x[i] - x[j], p) + 1);
  return out;
}

/// d(lambda): classes of the eps-coordinates modulo p.
inline alcove_cells::Partition residue_partition(const std::vector<std::int64_t>& a, std::int64_t p) {
  std::map<std::int64_t, int> classes;
  for (auto x : epsilon(a)) ++classes[((x % p) + p) % p];
  std::vector<int> parts;
  for (auto [r, c] : classes) parts.push_back(c);
  std::sort(parts.rbegin(), parts.rend());
  return alcove_cells::Partition(parts);
}

/// Order of the stabilizer: the product of factorials of the residue classes.
inline std::size_t stabilizer_order(const std::vector<std::int64_t>& a, std::int64_t p) {
  std::size_t order = 1;
  const auto classes = residue_partition(a, p);
  for (int c : classes.parts())
    for (int k = 2; k <= c; ++k) order *= static_cast<std::size_t>(k);
  return order;
}

inline std::vector<int> prefix(const alcove_cells::Partition& a, int len) {
  std::vector<int> s;
  int acc = 0;
  for (int k = 1; k <= len; ++k) s.push_back(acc += a.part(static_cast<std::size_t>(k)));
  return s;
}

/// Dominance straight from prefix sums.
inline bool dominated(const alcove_cells::Partition& a, const alcove_cells::Partition& b) {
  const auto sa = prefix(a, a.total());
  const auto sb = prefix(b, b.total());
  for (std::size_t k = 0; k < sa.size(); ++k)
    if (sa[k] > sb[k]) return false;
  return true;
}

/// The least upper bound found by scanning every partition of the total.
inline alcove_cells::Partition least_upper_bound(const std::vector<alcove_cells::Partition>& items) {
  const int total = items.front().total();
  std::vector<alcove_cells::Partition> uppers;
  for (const auto& c : alcove_cells::partitions_of(total)) {
    if (std::all_of(items.begin(), items.end(), [&](const auto& x) { return dominated(x, c); })) uppers.push_back(c);
  }
  for (const auto& u : uppers) {
    if (std::all_of(uppers.begin(), uppers.end(), [&](const auto& v) { return dominated(u, v); })) return u;
  }
  throw alcove_cells::InvariantViolation("no least upper bound");
}

/// Conjugate via the Young diagram cell set.
inline alcove_cells::Partition young_transpose(const alcove_cells::Partition& a) {
  std::set<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < a.parts().size(); ++r)
    for (int c = 0; c < a.parts()[r]; ++c) cells.insert({c, static_cast<int>(r)});
  std::map<int, int> rows;
  for (auto [r, c] : cells) ++rows[r];
  std::vector<int> parts;
  for (auto [r, len] : rows) parts.push_back(len);
  return alcove_cells::Partition(parts);
}

}  // namespace oracle
