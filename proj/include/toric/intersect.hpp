#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "toric/cone.hpp"
#include "toric/fan.hpp"
#include "toric/numeric.hpp"

namespace toric {

/// Formal rational combination of orbit closures V(sigma), all of one
/// codimension (= dim sigma). Zero coefficients are never stored.
struct TorusCycle {
  std::size_t codim = 0;
  std::map<Cone, Rational, ConeLess> terms;

  /// The fundamental class [X] = V(0).
  static TorusCycle fundamental();
  static TorusCycle orbit(Cone sigma, Rational coefficient = 1);

  void add(Cone sigma, const Rational& c);
  /// Sum of all coefficients; for a zero-cycle this is its degree.
  Rational total() const;
};

/// Torus-invariant divisor sum_x c_x D_x.
using Divisor = std::map<std::size_t, Integer>;

/// Memo key for (product of prime divisors) . V(base).
struct MonomialKey {
  std::vector<std::uint8_t> rays;  // sorted multiset of ray ids
  Cone base;
  bool operator==(const MonomialKey&) const = default;
};

struct MonomialKeyHash {
  std::size_t operator()(const MonomialKey& k) const noexcept;
};

/// Intersection numbers of torus-invariant divisors on a smooth complete fan.
///
/// Multiplying D_x into V(sigma):
///   x not in sigma:  V(sigma + x) if that is a cone, else 0;
///   x in sigma:      replace D_x by -sum_{u not in C} <m,u> D_u, where C is the
///                    lowest-indexed maximal cone containing sigma and m is the
///                    dual functional of x in C, then apply the first rule.
///
/// The engine memoizes products and is therefore not thread-safe; create one
/// engine per worker. The fan must outlive the engine.
class IntersectionEngine {
 public:
  explicit IntersectionEngine(const Fan& fan) : fan_(&fan) {}

  const Fan& fan() const { return *fan_; }

  /// D_x . cycle. Throws for unknown rays or when the cycle is already a
  /// zero-cycle.
  TorusCycle mul_prime_divisor(std::size_t ray, const TorusCycle& cycle) const;
  TorusCycle mul_divisor(const Divisor& divisor, const TorusCycle& cycle) const;

  /// D_{x1} ... D_{xd} on X. Requires exactly rank() rays.
  Rational intersection_number(std::span<const std::size_t> rays);
  /// D_{x1} ... D_{xk} . V(tau) with k + dim(tau) = rank().
  Rational intersect_against_subvariety(std::span<const std::size_t> rays, Cone tau);

  /// Integer-valued core of the two queries above.
  Integer monomial_degree(std::span<const std::size_t> rays, Cone base);
  /// (D_x)^power . V(base); power + dim(base) = rank().
  Integer power_degree(std::size_t ray, std::size_t power, Cone base);

  std::size_t cache_size() const { return cache_.size(); }

 private:
  /// D_x . V(sigma) as (cone, integer coefficient) pairs.
  void expand(std::size_t ray, Cone sigma, std::vector<std::pair<Cone, Integer>>& out) const;
  Integer degree(std::vector<std::uint8_t>& rays, Cone base);

  const Fan* fan_;
  std::unordered_map<MonomialKey, Integer, MonomialKeyHash> cache_;
};

struct CurveClass {
  TorusCycle cycle;
  /// (D_x . C) for every ray x, read off the wall relation.
  IntegerVector relation;
};

CurveClass curve_class_of_wall(const Fan& fan, Cone wall);

}  // namespace toric
