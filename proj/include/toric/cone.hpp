#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace toric {

/// Hard limit on rays per fan; cones are stored as 64-bit ray masks.
inline constexpr std::size_t kMaxRays = 64;

/// A simplicial cone identified by the sorted set of its generating ray ids.
class Cone {
 public:
  constexpr Cone() = default;
  static constexpr Cone from_mask(std::uint64_t mask) { return Cone(mask); }
  Cone(std::initializer_list<std::size_t> ids) {
    for (auto id : ids) mask_ |= bit(id);
  }
  template <class Range>
  static Cone of(const Range& ids) {
    Cone c;
    for (auto id : ids) c.mask_ |= bit(static_cast<std::size_t>(id));
    return c;
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr std::size_t dim() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(std::size_t id) const { return (mask_ & bit(id)) != 0; }
  constexpr bool contains(Cone other) const { return (mask_ & other.mask_) == other.mask_; }
  constexpr bool disjoint(Cone other) const { return (mask_ & other.mask_) == 0; }

  constexpr Cone with(std::size_t id) const { return Cone(mask_ | bit(id)); }
  constexpr Cone without(std::size_t id) const { return Cone(mask_ & ~bit(id)); }
  constexpr Cone operator|(Cone o) const { return Cone(mask_ | o.mask_); }
  constexpr Cone operator&(Cone o) const { return Cone(mask_ & o.mask_); }
  constexpr Cone minus(Cone o) const { return Cone(mask_ & ~o.mask_); }

  /// Ray ids in increasing order.
  std::vector<std::size_t> ids() const {
    std::vector<std::size_t> out;
    out.reserve(dim());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1)
      out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
  }

  constexpr bool operator==(const Cone&) const = default;

  /// Lexicographic order on the sorted id lists, so that {0,5} < {1,2}.
  friend bool lex_less(Cone a, Cone b) {
    std::uint64_t x = a.mask_, y = b.mask_;
    while (x != 0 && y != 0) {
      const int i = std::countr_zero(x), j = std::countr_zero(y);
      if (i != j) return i < j;
      x &= x - 1;
      y &= y - 1;
    }
    return x == 0 && y != 0;
  }

 private:
  constexpr explicit Cone(std::uint64_t m) : mask_(m) {}
  static constexpr std::uint64_t bit(std::size_t id) { return std::uint64_t{1} << id; }

  std::uint64_t mask_ = 0;
};

/// Strict weak order for ordered containers: lexicographic on ray ids.
struct ConeLess {
  bool operator()(Cone a, Cone b) const { return lex_less(a, b); }
};

struct ConeHash {
  std::size_t operator()(Cone c) const noexcept { return std::hash<std::uint64_t>{}(c.mask()); }
};

}  // namespace toric
