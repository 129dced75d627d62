#pragma once

// Positive subroot systems of A_n encoded by their bases, good bases, and the
// weight-cell partitions s(lambda) and d(lambda).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "alcove_cells/alcove.hpp"
#include "alcove_cells/errors.hpp"
#include "alcove_cells/partition.hpp"
#include "alcove_cells/rootsys.hpp"

namespace alcove_cells {

/// Sorted, duplicate-free set of positive roots.
using RootSet = std::vector<RootA>;

inline RootSet make_root_set(std::span<const RootA> roots) {
  RootSet s(roots.begin(), roots.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline std::string to_string(std::span<const RootA> roots) {
  std::string s = "{";
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (k) s += ",";
    s += to_string(roots[k]);
  }
  return s + "}";
}

/// Pairwise <alpha, beta> in {0, -1} and every index used at most once as a
/// left endpoint and at most once as a right endpoint.
inline bool is_subroot_basis(std::span<const RootA> roots) {
  const auto s = make_root_set(roots);
  for (std::size_t a = 0; a < s.size(); ++a) {
    if (s[a].i >= s[a].j || s[a].i < 1) return false;
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      const int m = root_inner(s[a], s[b]);
      if (m != 0 && m != -1) return false;
    }
  }
  std::set<int> lefts, rights;
  for (const auto& r : s) {
    if (!lefts.insert(r.i).second || !rights.insert(r.j).second) return false;
  }
  return true;
}

/// Chain components of a basis as increasing index sequences
/// i_1 < i_2 < ... < i_m, linked by the roots (i_k, i_{k+1}).
inline std::vector<std::vector<int>> chains(std::span<const RootA> basis) {
  if (!is_subroot_basis(basis)) throw PreconditionError("not a subroot basis: " + to_string(basis));
  std::map<int, int> next;
  std::set<int> rights;
  for (const auto& r : basis) {
    next[r.i] = r.j;
    rights.insert(r.j);
  }
  std::vector<std::vector<int>> out;
  for (const auto& [start, _] : next) {
    if (rights.count(start)) continue;
    std::vector<int> chain{start};
    for (auto it = next.find(start); it != next.end(); it = next.find(it->second)) chain.push_back(it->second);
    out.push_back(std::move(chain));
  }
  return out;
}

/// pi(Psi): chain sizes (nodes) sorted decreasingly, padded with 1's to n+1.
inline Partition partition_of_basis(std::span<const RootA> basis, int rank) {
  for (const auto& r : basis) check_root(r, rank);
  std::vector<int> parts;
  for (const auto& c : chains(basis)) parts.push_back(static_cast<int>(c.size()));
  return Partition::padded(std::move(parts), rank + 1);
}

inline bool is_antichain(std::span<const RootA> roots) {
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = 0; b < roots.size(); ++b)
      if (a != b && roots[a] != roots[b] && root_leq(roots[a], roots[b])) return false;
  return true;
}

inline bool is_good_basis(std::span<const RootA> roots) { return is_subroot_basis(roots) && is_antichain(roots); }

/// Validated basis of a positive subroot system.
class BasisSet {
 public:
  BasisSet() = default;
  static BasisSet make(std::span<const RootA> roots) {
    if (!is_subroot_basis(roots)) throw PreconditionError("not a subroot basis: " + to_string(roots));
    return BasisSet(make_root_set(roots));
  }
  const RootSet& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  bool contains(const RootA& r) const { return std::binary_search(roots_.begin(), roots_.end(), r); }
  friend auto operator<=>(const BasisSet&, const BasisSet&) = default;

 private:
  explicit BasisSet(RootSet roots) : roots_(std::move(roots)) {}
  RootSet roots_;
};

/// Basis whose roots (i_k, j_k) have both i_k and j_k strictly increasing;
/// roots() is in that order.
class GoodBasis {
 public:
  GoodBasis() = default;
  static GoodBasis make(std::span<const RootA> roots) {
    if (!is_good_basis(roots)) throw PreconditionError("not a good basis: " + to_string(roots));
    return GoodBasis(make_root_set(roots));
  }
  const RootSet& roots() const { return roots_; }
  std::size_t size() const { return roots_.size(); }
  BasisSet basis() const { return BasisSet::make(roots_); }
  friend auto operator<=>(const GoodBasis&, const GoodBasis&) = default;

 private:
  explicit GoodBasis(RootSet roots) : roots_(std::move(roots)) {}
  RootSet roots_;
};

/// All roots (i_a, i_b), a < b, over each chain of the basis.
inline RootSet positive_roots_of(std::span<const RootA> basis) {
  RootSet out;
  for (const auto& c : chains(basis))
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b) out.push_back({c[a], c[b]});
  std::sort(out.begin(), out.end());
  return out;
}

/// Gamma_Psi: positive roots above some element of `roots`.
inline RootSet upward_closure(std::span<const RootA> roots, int rank) {
  RootSet out;
  for (const auto& alpha : positive_roots(rank)) {
    if (std::any_of(roots.begin(), roots.end(), [&](const RootA& b) { return root_leq(b, alpha); })) {
      out.push_back(alpha);
    }
  }
  return out;
}

/// Simple roots of a closed positive system: elements that are not the sum of
/// two elements of the set.
inline RootSet basis_of_positive_system(std::span<const RootA> positive) {
  const auto s = make_root_set(positive);
  auto has = [&](int i, int j) { return std::binary_search(s.begin(), s.end(), RootA{i, j}); };
  RootSet out;
  for (const auto& r : s) {
    bool decomposable = false;
    for (int k = r.i + 1; k < r.j && !decomposable; ++k) decomposable = has(r.i, k) && has(k, r.j);
    if (!decomposable) out.push_back(r);
  }
  return out;
}

namespace detail {

inline void check_dominant(const ShiftedPoint& pt) {
  if (!is_regular_dominant(pt)) {
    throw PreconditionError("point " + to_string(pt) + " is not regular dominant");
  }
}

inline bool subset_of(std::span<const RootA> a, std::span<const RootA> b) {
  return std::all_of(a.begin(), a.end(), [&](const RootA& r) { return std::find(b.begin(), b.end(), r) != b.end(); });
}

/// Deterministic order on bases: size, then roots listed by (height, i).
inline bool basis_order(const RootSet& a, const RootSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto key = [](RootSet s) {
    std::vector<std::pair<int, int>> k;
    for (const auto& r : s) k.emplace_back(r.height(), r.i);
    std::sort(k.begin(), k.end());
    return k;
  };
  return key(a) < key(b);
}

}  // namespace detail

/// Gamma_lambda = {alpha > 0 : <lambda + rho, alpha> >= p}.
inline RootSet gamma(const ShiftedPoint& pt, std::int64_t p) {
  detail::check_dominant(pt);
  RootSet out;
  const auto roots = positive_roots(pt.rank());
  const auto v = pairings(pt);
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (v[k] >= Rational(p)) out.push_back(roots[k]);
  return out;
}

/// Every good basis inside `scope`, the empty one included.
inline std::vector<GoodBasis> enumerate_good_bases(std::span<const RootA> scope) {
  const auto s = make_root_set(scope);
  auto compatible = [](const RootA& a, const RootA& b) {
    const int m = root_inner(a, b);
    return (m == 0 || m == -1) && !root_leq(a, b) && !root_leq(b, a);
  };
  std::vector<RootSet> found;
  RootSet cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    found.push_back(cur);
    for (std::size_t k = from; k < s.size(); ++k) {
      if (std::all_of(cur.begin(), cur.end(), [&](const RootA& r) { return compatible(r, s[k]); })) {
        cur.push_back(s[k]);
        self(self, k + 1);
        cur.pop_back();
      }
    }
  };
  rec(rec, 0);
  std::sort(found.begin(), found.end(), detail::basis_order);
  std::vector<GoodBasis> out;
  out.reserve(found.size());
  for (const auto& b : found) out.push_back(GoodBasis::make(b));
  return out;
}

/// s(lambda) as the supremum of pi(Psi) over good bases Psi inside Gamma_lambda.
inline Partition s_partition(const ShiftedPoint& pt, std::int64_t p) {
  const int n = pt.rank();
  const auto bases = enumerate_good_bases(gamma(pt, p));
  const Partition top({n + 1});
  Partition best = Partition::trivial(n + 1);
  for (const auto& b : bases) {
    best = sup({best, partition_of_basis(b.roots(), n)});
    if (best == top) break;  // nothing lies above (n+1)
  }
  return best;
}

/// s(lambda) straight from its definition: every subset of Gamma_lambda that
/// is a basis whose whole positive system lies in Gamma_lambda.
inline Partition s_partition_oracle(const ShiftedPoint& pt, std::int64_t p) {
  const int n = pt.rank();
  const auto g = gamma(pt, p);
  if (g.size() >= 31) throw ResourceLimit("Gamma too large for subset enumeration");
  Partition best = Partition::trivial(n + 1);
  const std::uint32_t limit = 1u << g.size();
  RootSet subset;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    subset.clear();
    for (std::size_t k = 0; k < g.size(); ++k)
      if (mask & (1u << k)) subset.push_back(g[k]);
    if (!is_subroot_basis(subset)) continue;
    if (!detail::subset_of(positive_roots_of(subset), g)) continue;
    best = sup({best, partition_of_basis(subset, n)});
  }
  return best;
}

/// m_Psi: number of comparable pairs in the basis.
inline std::size_t bad_pair_count(std::span<const RootA> basis) {
  std::size_t m = 0;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      if (root_leq(basis[a], basis[b]) || root_leq(basis[b], basis[a])) ++m;
  return m;
}

namespace detail {

inline std::size_t chain_of(const std::vector<std::vector<int>>& cs, const RootA& r) {
  for (std::size_t c = 0; c < cs.size(); ++c)
    if (std::find(cs[c].begin(), cs[c].end(), r.i) != cs[c].end()) return c;
  throw InvariantViolation("root " + to_string(r) + " not found in any chain");
}

}  // namespace detail

/// One step of the good-basis reduction for the comparable pair
/// alpha_1 = (a, b) > alpha_2 = (c, d):
///   first  = basis with alpha_1, alpha_2 replaced by (a, d) and (c, b);
///   second = basis with the smaller of the two chain components removed
///            (alpha_2's component on a tie).
/// Both results have fewer comparable pairs and lie in the upward closure of
/// the input's positive system.
inline std::pair<BasisSet, BasisSet> reduce_step(const BasisSet& basis, const std::pair<RootA, RootA>& pair, int rank) {
  const auto& [alpha1, alpha2] = pair;
  for (const auto& r : basis.roots()) check_root(r, rank);
  if (!basis.contains(alpha1) || !basis.contains(alpha2)) {
    throw PreconditionError("reduce_step: pair not in basis");
  }
  if (alpha1 == alpha2 || !root_leq(alpha2, alpha1)) {
    throw PreconditionError("reduce_step: need alpha_1 > alpha_2, got " + to_string(alpha1) + ", " + to_string(alpha2));
  }
  const auto cs = chains(basis.roots());
  const std::size_t t1 = detail::chain_of(cs, alpha1);
  const std::size_t t2 = detail::chain_of(cs, alpha2);
  if (t1 == t2) throw PreconditionError("reduce_step: roots lie in the same chain component");

  RootSet crossed;
  for (const auto& r : basis.roots())
    if (r != alpha1 && r != alpha2) crossed.push_back(r);
  crossed.push_back({alpha1.i, alpha2.j});
  crossed.push_back({alpha2.i, alpha1.j});

  const std::size_t dropped = cs[t1].size() < cs[t2].size() ? t1 : t2;
  const auto& drop = cs[dropped];
  RootSet pruned;
  for (const auto& r : basis.roots()) {
    const bool in_dropped = std::find(drop.begin(), drop.end(), r.i) != drop.end();
    if (!in_dropped) pruned.push_back(r);
  }

  if (!is_subroot_basis(crossed) || !is_subroot_basis(pruned)) {
    throw InvariantViolation("reduce_step produced an invalid basis");
  }
  const auto m = bad_pair_count(basis.roots());
  if (bad_pair_count(make_root_set(crossed)) >= m || bad_pair_count(pruned) >= m) {
    throw InvariantViolation("reduce_step did not decrease the bad-pair count");
  }
  const auto ceiling = upward_closure(positive_roots_of(basis.roots()), rank);
  if (!detail::subset_of(positive_roots_of(crossed), ceiling) || !detail::subset_of(positive_roots_of(pruned), ceiling)) {
    throw InvariantViolation("reduce_step left the upward closure of the input system");
  }
  return {BasisSet::make(crossed), BasisSet::make(pruned)};
}

/// First comparable pair (alpha_1 > alpha_2) in canonical order of alpha_1,
/// then alpha_2.
inline std::optional<std::pair<RootA, RootA>> first_comparable_pair(const BasisSet& basis) {
  for (const auto& a1 : basis.roots())
    for (const auto& a2 : basis.roots())
      if (a1 != a2 && root_leq(a2, a1)) return std::make_pair(a1, a2);
  return std::nullopt;
}

/// Leaves of the reduction tree, all good.
inline std::vector<GoodBasis> reduce_all(const BasisSet& basis, int rank) {
  auto pair = first_comparable_pair(basis);
  if (!pair) return {GoodBasis::make(basis.roots())};
  auto [first, second] = reduce_step(basis, *pair, rank);
  auto out = reduce_all(first, rank);
  auto more = reduce_all(second, rank);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

/// d(lambda) = pi(Phi_{lambda, p}).
inline Partition d_partition(const ShiftedPoint& pt, std::int64_t p) {
  const auto basis = basis_of_positive_system(stabilizer_subroot_system(pt, p));
  return partition_of_basis(basis, pt.rank());
}

}  // namespace alcove_cells
