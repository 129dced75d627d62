#pragma once

// Support-variety predictions for tilting and induced modules, weight cells,
// and the combinatorial upper-bound certificate: for each good basis Psi in
// Gamma_lambda a point mu with Psi inside Phi_{mu,p} and C(mu) below C(lambda)
// in the weak order, moved to a lattice point of its facette.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alcove_cells/alcove.hpp"
#include "alcove_cells/cells.hpp"
#include "alcove_cells/errors.hpp"
#include "alcove_cells/partition.hpp"
#include "alcove_cells/rational.hpp"
#include "alcove_cells/rootsys.hpp"

namespace alcove_cells {

struct SupportPrediction {
  ShiftedPoint point;
  std::int64_t p = 0;
  /// s(lambda) for tilting modules, d(lambda) for induced modules.
  Partition partition;
  /// The orbit is labelled by the transpose of `partition`.
  OrbitLabel orbit;
  /// p > n+1: the tilting formula is a theorem; otherwise only conjectural.
  bool theorem_backed = false;
  /// p >= n+1: the combinatorial upper bound applies.
  bool upper_bound_applies = false;
  std::optional<std::string> warning;
};

namespace detail {

inline void check_integral_dominant(const ShiftedPoint& pt) {
  if (!pt.is_integral()) throw PreconditionError("point " + to_string(pt) + " is not integral");
  check_dominant(pt);
}

inline SupportPrediction make_prediction(const ShiftedPoint& pt, std::int64_t p, Partition part) {
  SupportPrediction out;
  out.point = pt;
  out.p = p;
  out.orbit = orbit_label(transpose(part));
  out.partition = std::move(part);
  const std::int64_t h = pt.rank() + 1;
  out.theorem_backed = p > h;
  out.upper_bound_applies = p >= h;
  if (!out.theorem_backed) {
    out.warning = "p = " + std::to_string(p) + " <= n+1 = " + std::to_string(h) + ": prediction is conjectural";
  }
  return out;
}

}  // namespace detail

/// Predicted support of T(lambda): the closure of O_{s(lambda)^t}.
inline SupportPrediction tilting_support(const ShiftedPoint& pt, std::int64_t p) {
  detail::check_integral_dominant(pt);
  return detail::make_prediction(pt, p, s_partition(pt, p));
}

/// Support of H^0(lambda): the closure of O_{d(lambda)^t}.
inline SupportPrediction induced_support(const ShiftedPoint& pt, std::int64_t p) {
  detail::check_integral_dominant(pt);
  return detail::make_prediction(pt, p, d_partition(pt, p));
}

/// Weight-cell label s(lambda)^t.
inline Partition weight_cell_of(const ShiftedPoint& pt, std::int64_t p) {
  detail::check_integral_dominant(pt);
  return transpose(s_partition(pt, p));
}

namespace detail {

/// mu + rho for the good basis roots[k..]; `alcove` holds the indices n_ij of
/// C(lambda). Peels off the root with the smallest left endpoint, builds the
/// point for the rest, then fixes a_{i_1} and a flat prefix a_1 = ... = a_{i_1-1}.
inline std::vector<Rational> mu_coordinates(const RootSet& roots, std::size_t k, const Alcove& alcove) {
  const int n = alcove.rank();
  const Rational p(alcove.p());
  const Rational unit(1, n);
  const auto [i1, j1] = roots[k];
  auto at = [](std::vector<Rational>& v, int l) -> Rational& { return v[static_cast<std::size_t>(l - 1)]; };
  std::vector<Rational> a(static_cast<std::size_t>(n));

  Rational ceiling;  // strict upper bound for the prefix value
  if (k + 1 == roots.size()) {
    for (int l = i1 + 1; l <= n; ++l) at(a, l) = unit;
    at(a, i1) = p - Rational(j1 - i1 - 1) * unit;
    if (i1 == 1) return a;
    ceiling = unit / Rational(i1 - 1);
  } else {
    auto b = mu_coordinates(roots, k + 1, alcove);
    for (int l = i1 + 1; l <= n; ++l) at(a, l) = at(b, l);
    Rational tail = 0;
    for (int l = i1 + 1; l <= j1 - 1; ++l) tail += at(b, l);
    at(a, i1) = p - tail;
    if (i1 == 1) return a;

    // <mu + rho, eps_1 - eps_{j_1 - 1}> = (i_1 - 1) a + (a_{i_1} + ... + a_{j_1 - 2}) < p
    Rational head = 0;
    for (int l = i1; l <= j1 - 2; ++l) head += at(a, l);
    ceiling = (p - head) / Rational(i1 - 1);
    // (i_1 - i) a + <nu + rho, eps_{j_1} - eps_j> < n_{j_1 j} p for i < i_1 <= j_1 <= j
    for (int j = j1; j <= n + 1; ++j) {
      Rational nu_pair = 0;
      for (int l = j1; l < j; ++l) nu_pair += at(b, l);
      const Rational limit = Rational(j == j1 ? 1 : alcove.index({j1, j})) * p - nu_pair;
      for (int i = 1; i < i1; ++i) ceiling = std::min(ceiling, limit / Rational(i1 - i));
    }
  }
  if (ceiling <= 0) throw InvariantViolation("no admissible prefix value while constructing mu");
  const Rational flat = ceiling / 2;
  for (int l = 1; l < i1; ++l) at(a, l) = flat;
  return a;
}

}  // namespace detail

/// A regular dominant point mu with every root of the good basis' positive
/// system in Phi_{mu,p} and C(mu) weakly below C(lambda). All three properties
/// are verified before returning.
inline ShiftedPoint construct_mu(const ShiftedPoint& pt, const GoodBasis& good, std::int64_t p) {
  detail::check_dominant(pt);
  const int n = pt.rank();
  for (const auto& r : good.roots()) check_root(r, n);
  const auto g = gamma(pt, p);
  if (!detail::subset_of(good.roots(), g)) {
    throw PreconditionError("good basis " + to_string(good.roots()) + " is not contained in Gamma");
  }
  const Alcove target = alcove_of(pt, p);

  ShiftedPoint mu;
  if (good.size() == 0) {
    mu = ShiftedPoint(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1, n)));
  } else {
    mu = ShiftedPoint(detail::mu_coordinates(good.roots(), 0, target));
  }

  if (!is_regular_dominant(mu)) throw InvariantViolation("mu " + to_string(mu) + " is not regular dominant");
  for (const auto& beta : positive_roots_of(good.roots())) {
    if (!is_integer(pairing(mu, beta) / Rational(p))) {
      throw InvariantViolation("mu " + to_string(mu) + " is off the p-wall of " + to_string(beta));
    }
  }
  if (!weak_leq(alcove_of(mu, p), target)) {
    throw InvariantViolation("C(mu) is not below C(lambda) for mu " + to_string(mu));
  }
  return mu;
}

/// Coordinate-lexicographically smallest integral point of f, searched over the
/// box cut out by the simple-root data.
inline std::optional<ShiftedPoint> facette_lattice_point(const Facette& f) {
  const int n = f.rank();
  const std::int64_t p = f.p();
  std::vector<std::int64_t> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const auto d = f.at({k, k + 1});
    auto kk = static_cast<std::size_t>(k - 1);
    if (d.wall) {
      lo[kk] = hi[kk] = d.index * p;
    } else {
      lo[kk] = (d.index - 1) * p + 1;
      hi[kk] = d.index * p - 1;
    }
    if (lo[kk] > hi[kk]) return std::nullopt;
  }
  std::vector<std::int64_t> cur = lo;
  const auto roots = positive_roots(n);
  while (true) {
    bool inside = true;
    for (std::size_t r = 0; r < roots.size() && inside; ++r) {
      std::int64_t v = 0;
      for (int l = roots[r].i; l < roots[r].j; ++l) v += cur[static_cast<std::size_t>(l - 1)];
      const auto d = f.data()[r];
      inside = d.wall ? v == d.index * p : ((d.index - 1) * p < v && v < d.index * p);
    }
    if (inside) return ShiftedPoint::from_ints(cur);
    // odometer, last coordinate fastest so the first hit is lexicographically smallest
    int k = n - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == hi[static_cast<std::size_t>(k)]) {
      cur[static_cast<std::size_t>(k)] = lo[static_cast<std::size_t>(k)];
      --k;
    }
    if (k < 0) return std::nullopt;
    ++cur[static_cast<std::size_t>(k)];
  }
}

struct CertificateLeg {
  GoodBasis basis;
  Partition basis_partition;
  ShiftedPoint mu;
  ShiftedPoint lattice_point;
  Partition d;
  Alcove mu_alcove;
};

struct UpperBoundCertificate {
  ShiftedPoint point;
  std::int64_t p = 0;
  Alcove alcove;
  std::vector<CertificateLeg> legs;
  Partition s;
  OrbitLabel orbit;
};

/// Runs the upper-bound pipeline over every good basis in Gamma_lambda and
/// checks each link: pi(Psi) <= d(mu'), F(mu') = F(mu), and the supremum of
/// the pi(Psi) equals s(lambda).
inline UpperBoundCertificate upper_bound_certificate(const ShiftedPoint& pt, std::int64_t p) {
  const int n = pt.rank();
  if (p < n + 1) {
    throw PreconditionError("upper bound requires p >= n+1 (p = " + std::to_string(p) + ", n+1 = " +
                            std::to_string(n + 1) + ")");
  }
  detail::check_integral_dominant(pt);
  UpperBoundCertificate cert{pt, p, alcove_of(pt, p), {}, {}, {}};
  std::vector<Partition> parts;
  for (const auto& good : enumerate_good_bases(gamma(pt, p))) {
    auto mu = construct_mu(pt, good, p);
    const auto face = facette_of(mu, p);
    auto lattice = facette_lattice_point(face);
    if (!lattice) throw InvariantViolation("facette of mu " + to_string(mu) + " has no lattice point");
    if (facette_of(*lattice, p) != face) throw InvariantViolation("lattice point left the facette of mu");
    auto pi = partition_of_basis(good.roots(), n);
    auto d = d_partition(*lattice, p);
    if (!dominance_leq(pi, d)) {
      throw InvariantViolation("pi(Psi) = " + to_string(pi) + " not below d(mu') = " + to_string(d));
    }
    parts.push_back(pi);
    auto mu_alcove = alcove_of(mu, p);
    cert.legs.push_back({good, std::move(pi), std::move(mu), std::move(*lattice), std::move(d), std::move(mu_alcove)});
  }
  cert.s = sup(parts);
  if (cert.s != s_partition(pt, p)) throw InvariantViolation("certificate supremum differs from s(lambda)");
  cert.orbit = orbit_label(transpose(cert.s));
  return cert;
}

/// Integral regular dominant points in [1, box]^n whose weight cell is target,
/// in lexicographic order.
inline std::vector<ShiftedPoint> enumerate_cell(const Partition& target, std::int64_t p, std::int64_t box) {
  const int n = target.total() - 1;
  check_rank(n);
  if (box < 1) throw PreconditionError("box must be >= 1");
  std::vector<ShiftedPoint> out;
  std::vector<std::int64_t> cur(static_cast<std::size_t>(n), 1);
  while (true) {
    auto pt = ShiftedPoint::from_ints(cur);
    if (weight_cell_of(pt, p) == target) out.push_back(std::move(pt));
    int k = n - 1;
    while (k >= 0 && cur[static_cast<std::size_t>(k)] == box) cur[static_cast<std::size_t>(k--)] = 1;
    if (k < 0) break;
    ++cur[static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace alcove_cells
