#pragma once

// Alcoves and facettes of the p-dilated affine arrangement H_{alpha, m p},
// their closures and walls, the weak order on dominant alcoves, and
// reachability under raising reflections.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "alcove_cells/affine.hpp"
#include "alcove_cells/errors.hpp"
#include "alcove_cells/rational.hpp"
#include "alcove_cells/rootsys.hpp"

namespace alcove_cells {

inline constexpr std::size_t kDefaultBfsBound = 1'000'000;

/// Per-root datum of a facette. A wall means <x, alpha> = index * p; otherwise
/// (index - 1) p < <x, alpha> < index * p.
struct RootDatum {
  bool wall = false;
  std::int64_t index = 1;

  static constexpr RootDatum on_wall(std::int64_t m) { return {true, m}; }
  static constexpr RootDatum between(std::int64_t n) { return {false, n}; }
  friend constexpr auto operator<=>(const RootDatum&, const RootDatum&) = default;
};

namespace detail {

inline std::int64_t lcm_upto(int m) {
  std::int64_t l = 1;
  for (int k = 2; k <= m; ++k) l = std::lcm(l, static_cast<std::int64_t>(k));
  return l;
}

inline void check_p(std::int64_t p) {
  if (p < 1) throw PreconditionError("p must be >= 1, got " + std::to_string(p));
}

}  // namespace detail

/// A point in the relative interior of the region cut out by `data`, or none
/// when the region is empty.
///
/// Writes x = lambda + rho in eps-coordinates as x = p z / D with
/// D = lcm(1, ..., n+1) and solves the integer difference constraints on z
/// with Bellman-Ford. Every non-empty facette is the relative interior of a
/// face of an alcove simplex whose vertices satisfy x_i - x_j in pZ, so the
/// barycenter of its (at most n+1) vertices has z integral; the integer system
/// is therefore feasible exactly when the facette is non-empty.
inline std::optional<ShiftedPoint> relative_interior_point(int rank, std::int64_t p,
                                                           std::span<const RootDatum> data) {
  check_rank(rank);
  detail::check_p(p);
  if (data.size() != root_count(rank)) throw PreconditionError("facette data has wrong length");
  const int nodes = rank + 1;
  const std::int64_t scale = detail::lcm_upto(nodes);
  struct Edge {
    int from, to;
    std::int64_t w;
  };
  std::vector<Edge> edges;
  edges.reserve(2 * data.size());
  const auto roots = positive_roots(rank);
  // z_u - z_v <= c  becomes the edge v -> u of weight c.
  auto constrain = [&](int u, int v, std::int64_t c) { edges.push_back({v - 1, u - 1, c}); };
  for (std::size_t k = 0; k < roots.size(); ++k) {
    const auto [i, j] = roots[k];
    const auto d = data[k];
    if (d.wall) {
      constrain(i, j, d.index * scale);
      constrain(j, i, -d.index * scale);
    } else {
      constrain(i, j, d.index * scale - 1);
      constrain(j, i, -(d.index - 1) * scale - 1);
    }
  }
  std::vector<std::int64_t> dist(static_cast<std::size_t>(nodes), 0);
  for (int round = 0; round <= nodes; ++round) {
    bool changed = false;
    for (const auto& e : edges) {
      if (dist[static_cast<std::size_t>(e.from)] + e.w < dist[static_cast<std::size_t>(e.to)]) {
        dist[static_cast<std::size_t>(e.to)] = dist[static_cast<std::size_t>(e.from)] + e.w;
        changed = true;
      }
    }
    if (!changed) {
      std::vector<Rational> a;
      a.reserve(static_cast<std::size_t>(rank));
      for (int k = 0; k < rank; ++k) {
        a.emplace_back(Rational(p * (dist[static_cast<std::size_t>(k)] - dist[static_cast<std::size_t>(k + 1)]), scale));
      }
      return ShiftedPoint(std::move(a));
    }
  }
  return std::nullopt;  // negative cycle
}

/// Face of the arrangement, given by one RootDatum per positive root in
/// canonical order. Always non-empty.
class Facette {
 public:
  /// Throws PreconditionError when the data describe an empty set.
  static Facette make(int rank, std::int64_t p, std::vector<RootDatum> data) {
    if (!relative_interior_point(rank, p, data)) {
      throw PreconditionError("facette data are not realizable");
    }
    return Facette(rank, p, std::move(data));
  }

  int rank() const { return rank_; }
  std::int64_t p() const { return p_; }
  const std::vector<RootDatum>& data() const { return data_; }
  const RootDatum& at(const RootA& r) const { return data_[root_index(r, rank_)]; }

  bool is_alcove() const {
    return std::none_of(data_.begin(), data_.end(), [](const RootDatum& d) { return d.wall; });
  }
  /// Roots whose hyperplane contains the facette.
  std::vector<RootA> wall_roots() const {
    std::vector<RootA> out;
    const auto roots = positive_roots(rank_);
    for (std::size_t k = 0; k < roots.size(); ++k)
      if (data_[k].wall) out.push_back(roots[k]);
    return out;
  }

  ShiftedPoint interior_point() const { return *relative_interior_point(rank_, p_, data_); }

  friend auto operator<=>(const Facette&, const Facette&) = default;

 private:
  friend Facette facette_of(const ShiftedPoint&, std::int64_t);
  friend class Alcove;
  Facette(int rank, std::int64_t p, std::vector<RootDatum> data) : rank_(rank), p_(p), data_(std::move(data)) {}

  int rank_;
  std::int64_t p_;
  std::vector<RootDatum> data_;
};

/// Alcove given by its integers n_alpha: (n_alpha - 1) p < <x, alpha> < n_alpha p.
class Alcove {
 public:
  /// Throws PreconditionError when the indices describe an empty set.
  static Alcove make(int rank, std::int64_t p, std::vector<std::int64_t> indices) {
    if (indices.size() != root_count(rank)) throw PreconditionError("alcove needs one index per positive root");
    std::vector<RootDatum> data;
    for (auto n : indices) data.push_back(RootDatum::between(n));
    if (!relative_interior_point(rank, p, data)) throw PreconditionError("alcove indices are not realizable");
    return Alcove(rank, p, std::move(indices));
  }

  static std::optional<Alcove> try_make(int rank, std::int64_t p, std::vector<std::int64_t> indices) {
    try {
      return make(rank, p, std::move(indices));
    } catch (const PreconditionError&) {
      return std::nullopt;
    }
  }

  static Alcove bottom(int rank, std::int64_t p) {
    return Alcove(rank, p, std::vector<std::int64_t>(root_count(rank), 1));
  }

  int rank() const { return rank_; }
  std::int64_t p() const { return p_; }
  const std::vector<std::int64_t>& indices() const { return indices_; }
  std::int64_t index(const RootA& r) const { return indices_[root_index(r, rank_)]; }

  bool is_dominant() const {
    return std::all_of(indices_.begin(), indices_.end(), [](std::int64_t n) { return n >= 1; });
  }

  /// Number of hyperplanes separating this alcove from C_0.
  std::int64_t length() const {
    std::int64_t l = 0;
    for (auto n : indices_) l += std::abs(n - 1);
    return l;
  }

  Facette as_facette() const {
    std::vector<RootDatum> data;
    for (auto n : indices_) data.push_back(RootDatum::between(n));
    return Facette(rank_, p_, std::move(data));
  }

  ShiftedPoint interior_point() const { return as_facette().interior_point(); }

  friend auto operator<=>(const Alcove&, const Alcove&) = default;

 private:
  friend Alcove alcove_of(const ShiftedPoint&, std::int64_t);
  Alcove(int rank, std::int64_t p, std::vector<std::int64_t> indices)
      : rank_(rank), p_(p), indices_(std::move(indices)) {}

  int rank_;
  std::int64_t p_;
  std::vector<std::int64_t> indices_;
};

inline std::string to_string(const Alcove& a) {
  std::string s = "[";
  for (std::size_t k = 0; k < a.indices().size(); ++k) {
    if (k) s += ",";
    s += std::to_string(a.indices()[k]);
  }
  return s + "]";
}

/// The alcove whose lower closure contains pt.
inline Alcove alcove_of(const ShiftedPoint& pt, std::int64_t p) {
  detail::check_p(p);
  std::vector<std::int64_t> idx;
  for (const auto& v : pairings(pt)) idx.push_back(floor_to_int(v / Rational(p)) + 1);
  return Alcove(pt.rank(), p, std::move(idx));
}

/// The unique facette containing pt.
inline Facette facette_of(const ShiftedPoint& pt, std::int64_t p) {
  detail::check_p(p);
  std::vector<RootDatum> data;
  for (const auto& v : pairings(pt)) {
    Rational q = v / Rational(p);
    data.push_back(is_integer(q) ? RootDatum::on_wall(to_int(q)) : RootDatum::between(floor_to_int(q) + 1));
  }
  return Facette(pt.rank(), p, std::move(data));
}

namespace detail {

inline void check_compatible(const Facette& f, const ShiftedPoint& pt) {
  if (f.rank() != pt.rank()) throw PreconditionError("facette and point have different ranks");
}

inline bool datum_in_closure(const RootDatum& d, const Rational& v, std::int64_t p) {
  if (d.wall) return v == Rational(d.index * p);
  return Rational((d.index - 1) * p) <= v && v <= Rational(d.index * p);
}

inline bool datum_in_lower_closure(const RootDatum& d, const Rational& v, std::int64_t p) {
  if (d.wall) return v == Rational(d.index * p);
  return Rational((d.index - 1) * p) <= v && v < Rational(d.index * p);
}

}  // namespace detail

/// Topological closure of f.
inline bool closure_contains(const Facette& f, const ShiftedPoint& pt) {
  detail::check_compatible(f, pt);
  const auto v = pairings(pt);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!detail::datum_in_closure(f.data()[k], v[k], f.p())) return false;
  return true;
}

/// Walls keep equality; other roots take the half-open [(n-1)p, np).
inline bool lower_closure_contains(const Facette& f, const ShiftedPoint& pt) {
  detail::check_compatible(f, pt);
  const auto v = pairings(pt);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!detail::datum_in_lower_closure(f.data()[k], v[k], f.p())) return false;
  return true;
}

/// pt lies in the lower closure of f iff lambda >= w.lambda for every w in
/// Stab(pt), where lambda is any point of f.
inline bool lower_closure_contains_via_stabilizer(const Facette& f, const ShiftedPoint& pt) {
  if (!closure_contains(f, pt)) throw PreconditionError("point " + to_string(pt) + " is outside the closure of the facette");
  const auto lambda = to_epsilon(f.interior_point());
  for (const auto& w : stabilizer_group(pt, f.p())) {
    if (!epsilon_leq(w.apply_epsilon(lambda), lambda)) return false;
  }
  return true;
}

/// Wall H_{root, index p} of an alcove.
struct Wall {
  RootA root;
  std::int64_t index;
  friend constexpr auto operator<=>(const Wall&, const Wall&) = default;
};

namespace detail {

/// H_{alpha, m p} (m = n_alpha or n_alpha - 1) is a wall of `a` iff the
/// codimension-one face of its closure on that hyperplane is non-empty; the
/// witness point found there must have stabilizer {1, s_{alpha, m p}}.
inline std::optional<Wall> wall_candidate(const Alcove& a, std::size_t k, bool upper) {
  const auto roots = positive_roots(a.rank());
  std::vector<RootDatum> data;
  for (auto n : a.indices()) data.push_back(RootDatum::between(n));
  const std::int64_t m = upper ? a.indices()[k] : a.indices()[k] - 1;
  data[k] = RootDatum::on_wall(m);
  auto witness = relative_interior_point(a.rank(), a.p(), data);
  if (!witness) return std::nullopt;
  if (stabilizer_group(*witness, a.p()).size() != 2) {
    throw InvariantViolation("wall witness " + to_string(*witness) + " has stabilizer order != 2");
  }
  return Wall{roots[k], m};
}

}  // namespace detail

/// Walls H_{alpha, n_alpha p}.
inline std::vector<Wall> upper_walls(const Alcove& a) {
  std::vector<Wall> out;
  for (std::size_t k = 0; k < a.indices().size(); ++k)
    if (auto w = detail::wall_candidate(a, k, true)) out.push_back(*w);
  return out;
}

/// Walls H_{alpha, (n_alpha - 1) p}.
inline std::vector<Wall> lower_walls(const Alcove& a) {
  std::vector<Wall> out;
  for (std::size_t k = 0; k < a.indices().size(); ++k)
    if (auto w = detail::wall_candidate(a, k, false)) out.push_back(*w);
  return out;
}

/// s(x) for the reflection s_{alpha, m p} acting on a shifted point.
inline ShiftedPoint reflect(const ShiftedPoint& pt, const RootA& alpha, std::int64_t m, std::int64_t p) {
  return AffineMap::reflection(alpha, m, pt.rank(), p).apply(pt);
}

/// Alcoves obtained by reflecting `a` across one of its upper walls.
inline std::vector<Alcove> up_step_neighbors(const Alcove& a) {
  const auto inner = a.interior_point();
  std::vector<Alcove> out;
  for (const auto& w : upper_walls(a)) out.push_back(alcove_of(reflect(inner, w.root, w.index, a.p()), a.p()));
  return out;
}

namespace detail {

inline void check_same_arrangement(const Alcove& a, const Alcove& b) {
  if (a.rank() != b.rank() || a.p() != b.p()) throw PreconditionError("alcoves belong to different arrangements");
}

inline void check_dominant(const Alcove& a) {
  if (!a.is_dominant()) throw PreconditionError("weak order is only defined on dominant alcoves, got " + to_string(a));
}

}  // namespace detail

/// Weak order on dominant alcoves: componentwise comparison of indices.
inline bool weak_leq(const Alcove& a, const Alcove& b) {
  detail::check_same_arrangement(a, b);
  detail::check_dominant(a);
  detail::check_dominant(b);
  for (std::size_t k = 0; k < a.indices().size(); ++k)
    if (a.indices()[k] > b.indices()[k]) return false;
  return true;
}

/// Breadth-first search from a along upper-wall crossings, discarding alcoves
/// with any index above b's.
inline bool weak_leq_oracle(const Alcove& a, const Alcove& b, std::size_t bound = kDefaultBfsBound) {
  detail::check_same_arrangement(a, b);
  detail::check_dominant(a);
  detail::check_dominant(b);
  auto within = [&](const Alcove& c) {
    for (std::size_t k = 0; k < c.indices().size(); ++k)
      if (c.indices()[k] > b.indices()[k]) return false;
    return true;
  };
  if (!within(a)) return false;
  std::set<Alcove> seen{a};
  std::deque<Alcove> queue{a};
  while (!queue.empty()) {
    Alcove c = std::move(queue.front());
    queue.pop_front();
    if (c == b) return true;
    for (auto& nb : up_step_neighbors(c)) {
      if (!within(nb) || !seen.insert(nb).second) continue;
      if (seen.size() > bound) throw ResourceLimit("weak order search exceeded bound " + std::to_string(bound));
      queue.push_back(std::move(nb));
    }
  }
  return false;
}

/// Coefficients of x on the simple roots, i.e. <x, omega_k> for the
/// fundamental (co)weights, using (A^{-1})_{kj} = min(k,j)(n+1-max(k,j))/(n+1).
inline std::vector<Rational> simple_root_coefficients(const ShiftedPoint& pt) {
  const int n = pt.rank();
  std::vector<Rational> c(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    Rational sum = 0;
    for (int j = 1; j <= n; ++j) sum += Rational(std::min(k, j) * (n + 1 - std::max(k, j)), n + 1) * pt[j];
    c[static_cast<std::size_t>(k - 1)] = sum;
  }
  return c;
}

/// Reachability of b from a by a chain of raising reflections
/// C -> s_{beta, m p} C with m >= n_beta(C), i.e. the transitive closure of the
/// one-step strong linkage relation on alcoves. A raising reflection moves every
/// point of C up in the root-lattice order, so states whose simple-root
/// coefficients already exceed the maximum attained on the closure of b are
/// discarded; this keeps the search finite.
inline bool up_reachable(const Alcove& a, const Alcove& b, std::size_t bound = kDefaultBfsBound) {
  detail::check_same_arrangement(a, b);
  if (a == b) return true;
  const int n = a.rank();
  const std::int64_t p = a.p();
  const auto roots = positive_roots(n);

  std::vector<Rational> ceiling(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    Rational sum = 0;
    for (int j = 1; j <= n; ++j)
      sum += Rational(std::min(k, j) * (n + 1 - std::max(k, j)), n + 1) * Rational(b.index({j, j + 1}) * p);
    ceiling[static_cast<std::size_t>(k - 1)] = sum;
  }
  auto below_ceiling = [&](const ShiftedPoint& x) {
    const auto c = simple_root_coefficients(x);
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] > ceiling[k]) return false;
    return true;
  };

  std::map<Alcove, ShiftedPoint> seen;
  std::deque<Alcove> queue;
  seen.emplace(a, a.interior_point());
  queue.push_back(a);
  while (!queue.empty()) {
    Alcove c = std::move(queue.front());
    queue.pop_front();
    const ShiftedPoint rep = seen.at(c);
    for (std::size_t k = 0; k < roots.size(); ++k) {
      for (std::int64_t m = c.indices()[k];; ++m) {
        ShiftedPoint image = reflect(rep, roots[k], m, p);
        if (!below_ceiling(image)) break;
        Alcove nb = alcove_of(image, p);
        if (nb == b) return true;
        if (seen.emplace(nb, image).second) {
          if (seen.size() > bound) throw ResourceLimit("strong linkage search exceeded bound " + std::to_string(bound));
          queue.push_back(std::move(nb));
        }
      }
    }
  }
  return false;
}

/// Positive roots alpha with <pt, alpha> in pZ.
inline std::vector<RootA> stabilizer_subroot_system(const ShiftedPoint& pt, std::int64_t p) {
  detail::check_p(p);
  std::vector<RootA> out;
  const auto roots = positive_roots(pt.rank());
  const auto v = pairings(pt);
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (is_integer(v[k] / Rational(p))) out.push_back(roots[k]);
  return out;
}

/// Every realizable dominant alcove with all indices in [1, max_index].
inline std::vector<Alcove> dominant_alcoves(int rank, std::int64_t p, std::int64_t max_index) {
  const std::size_t count = root_count(rank);
  std::vector<Alcove> out;
  if (max_index < 1) return out;
  std::vector<std::int64_t> idx(count, 1);
  while (true) {
    if (auto a = Alcove::try_make(rank, p, idx)) out.push_back(std::move(*a));
    std::size_t k = 0;
    while (k < count && idx[k] == max_index) idx[k++] = 1;
    if (k == count) break;
    ++idx[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace alcove_cells
