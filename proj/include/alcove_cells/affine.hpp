#pragma once

// Elements of the affine Weyl group W_p = W |x p ZPhi acting on lambda + rho
// (so the dot action on lambda is the linear action on the shifted point).

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "alcove_cells/errors.hpp"
#include "alcove_cells/rootsys.hpp"

namespace alcove_cells {

/// x -> w(x) + p * t on eps-coordinates, with t in Z^{n+1} summing to zero.
class AffineMap {
 public:
  static AffineMap identity(int rank, std::int64_t p) {
    return AffineMap(WeylPerm::identity(rank), std::vector<std::int64_t>(static_cast<std::size_t>(rank + 1), 0), p);
  }

  /// s_{alpha, m p}: s(x) = x - (<x, alpha> - m p) alpha.
  static AffineMap reflection(const RootA& alpha, std::int64_t m, int rank, std::int64_t p) {
    check_root(alpha, rank);
    std::vector<int> img(static_cast<std::size_t>(rank + 1));
    for (int k = 1; k <= rank + 1; ++k) img[static_cast<std::size_t>(k - 1)] = k;
    std::swap(img[static_cast<std::size_t>(alpha.i - 1)], img[static_cast<std::size_t>(alpha.j - 1)]);
    std::vector<std::int64_t> t(static_cast<std::size_t>(rank + 1), 0);
    t[static_cast<std::size_t>(alpha.i - 1)] = m;
    t[static_cast<std::size_t>(alpha.j - 1)] = -m;
    return AffineMap(WeylPerm(std::move(img)), std::move(t), p);
  }

  int rank() const { return perm_.rank(); }
  std::int64_t p() const { return p_; }
  const WeylPerm& linear_part() const { return perm_; }
  const std::vector<std::int64_t>& translation() const { return t_; }
  bool is_identity() const { return *this == identity(rank(), p_); }

  /// Action on raw eps-coordinates (no renormalisation).
  std::vector<Rational> apply_epsilon(std::span<const Rational> x) const {
    std::vector<Rational> y(x.size());
    for (int k = 1; k <= rank() + 1; ++k) y[static_cast<std::size_t>(perm_(k) - 1)] = x[static_cast<std::size_t>(k - 1)];
    for (std::size_t k = 0; k < y.size(); ++k) y[k] += Rational(p_ * t_[k]);
    return y;
  }

  ShiftedPoint apply(const ShiftedPoint& pt) const {
    auto x = to_epsilon(pt);
    return from_epsilon(apply_epsilon(x));
  }

  /// (this o other)(x) = this(other(x)).
  AffineMap operator*(const AffineMap& other) const {
    std::vector<std::int64_t> t(t_.size());
    for (int k = 1; k <= rank() + 1; ++k) {
      t[static_cast<std::size_t>(perm_(k) - 1)] = other.t_[static_cast<std::size_t>(k - 1)];
    }
    for (std::size_t k = 0; k < t.size(); ++k) t[k] += t_[k];
    return AffineMap(perm_ * other.perm_, std::move(t), p_);
  }

  friend auto operator<=>(const AffineMap&, const AffineMap&) = default;

 private:
  AffineMap(WeylPerm perm, std::vector<std::int64_t> t, std::int64_t p)
      : perm_(std::move(perm)), t_(std::move(t)), p_(p) {}

  WeylPerm perm_;
  std::vector<std::int64_t> t_;
  std::int64_t p_;
};

/// mu - lambda in N-span (nonnegative coefficients) of the simple roots,
/// given sum-preserving eps-coordinates.
inline bool epsilon_leq(std::span<const Rational> lambda, std::span<const Rational> mu) {
  Rational partial = 0;
  for (std::size_t k = 0; k + 1 < lambda.size(); ++k) {
    partial += mu[k] - lambda[k];
    if (partial < 0) return false;
  }
  return true;
}

/// Default closure cap: the stabiliser is a finite reflection group of order
/// at most (n+1)!.
inline std::size_t default_stabilizer_cap(int rank) {
  std::size_t f = 1;
  for (int k = 2; k <= rank + 1; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

/// Subgroup of W_p generated by the reflections s_{alpha, m p} whose
/// hyperplanes contain pt.
inline std::set<AffineMap> stabilizer_group(const ShiftedPoint& pt, std::int64_t p, std::size_t cap) {
  if (p < 1) throw PreconditionError("p must be >= 1");
  const int n = pt.rank();
  std::vector<AffineMap> gens;
  const auto roots = positive_roots(n);
  const auto pair = pairings(pt);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    Rational q = pair[k] / Rational(p);
    if (is_integer(q)) gens.push_back(AffineMap::reflection(roots[k], to_int(q), n, p));
  }
  std::set<AffineMap> group{AffineMap::identity(n, p)};
  std::vector<AffineMap> frontier{AffineMap::identity(n, p)};
  while (!frontier.empty()) {
    std::vector<AffineMap> next;
    for (const auto& g : frontier) {
      for (const auto& s : gens) {
        auto h = s * g;
        if (group.insert(h).second) {
          if (group.size() > cap) {
            throw ResourceLimit("stabilizer closure exceeded cap " + std::to_string(cap));
          }
          next.push_back(std::move(h));
        }
      }
    }
    frontier = std::move(next);
  }
  return group;
}

inline std::set<AffineMap> stabilizer_group(const ShiftedPoint& pt, std::int64_t p) {
  return stabilizer_group(pt, p, default_stabilizer_cap(pt.rank()));
}

}  // namespace alcove_cells
