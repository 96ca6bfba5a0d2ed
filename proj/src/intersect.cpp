#include "toric/intersect.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

TorusCycle TorusCycle::fundamental() { return orbit(Cone{}, 1); }

TorusCycle TorusCycle::orbit(Cone sigma, Rational coefficient) {
  TorusCycle c;
  c.codim = sigma.dim();
  c.add(sigma, coefficient);
  return c;
}

void TorusCycle::add(Cone sigma, const Rational& c) {
  if (sigma.dim() != codim) throw std::invalid_argument("TorusCycle: mixed codimensions");
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(sigma, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Rational TorusCycle::total() const {
  Rational s = 0;
  for (const auto& [cone, c] : terms) s += c;
  return s;
}

std::size_t MonomialKeyHash::operator()(const MonomialKey& k) const noexcept {
  std::size_t h = std::hash<std::uint64_t>{}(k.base.mask());
  for (auto r : k.rays) h = h * 1099511628211ULL ^ (r + 0x9e3779b9U);
  return h;
}

void IntersectionEngine::expand(std::size_t x, Cone sigma,
                                std::vector<std::pair<Cone, Integer>>& out) const {
  const Fan& fan = *fan_;
  if (!sigma.contains(x)) {
    const Cone up = sigma.with(x);
    if (fan.is_cone(up)) out.emplace_back(up, 1);
    return;
  }
  const auto containing = fan.containing_maximal(sigma);
  if (containing.empty()) throw std::invalid_argument("expand: not a cone of the fan");
  const std::size_t ci = containing.front();
  const Cone c = fan.maximal_cones()[ci];
  // D_x ~ -sum_{u not in c} <m,u> D_u, since <m,u> = 0 on c's other generators.
  for (std::size_t u = 0; u < fan.num_rays(); ++u) {
    if (c.contains(u)) continue;
    const Integer& p = fan.dual_pairing(ci, x, u);
    if (p == 0) continue;
    const Cone up = sigma.with(u);
    if (fan.is_cone(up)) out.emplace_back(up, -p);
  }
}

TorusCycle IntersectionEngine::mul_prime_divisor(std::size_t ray, const TorusCycle& cycle) const {
  if (ray >= fan_->num_rays()) throw std::out_of_range("mul_prime_divisor: unknown ray");
  if (cycle.codim >= fan_->rank())
    throw std::invalid_argument("mul_prime_divisor: cycle is already zero-dimensional");
  TorusCycle out;
  out.codim = cycle.codim + 1;
  std::vector<std::pair<Cone, Integer>> terms;
  for (const auto& [sigma, coeff] : cycle.terms) {
    terms.clear();
    expand(ray, sigma, terms);
    for (const auto& [cone, c] : terms) out.add(cone, coeff * Rational(c));
  }
  return out;
}

TorusCycle IntersectionEngine::mul_divisor(const Divisor& divisor, const TorusCycle& cycle) const {
  TorusCycle out;
  out.codim = cycle.codim + 1;
  for (const auto& [ray, c] : divisor) {
    if (c == 0) continue;
    const TorusCycle part = mul_prime_divisor(ray, cycle);
    for (const auto& [cone, v] : part.terms) out.add(cone, Rational(c) * v);
  }
  return out;
}

Integer IntersectionEngine::degree(std::vector<std::uint8_t>& rays, Cone base) {
  if (rays.empty()) return 1;

  // Multiply rays outside the base cone first: a single step, no rewrite.
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (base.contains(rays[i])) continue;
    const Cone up = base.with(rays[i]);
    if (!fan_->is_cone(up)) return 0;
    std::vector<std::uint8_t> rest(rays);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    return degree(rest, up);
  }

  MonomialKey key{rays, base};
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  std::vector<std::pair<Cone, Integer>> terms;
  expand(rays.front(), base, terms);
  std::vector<std::uint8_t> rest(rays.begin() + 1, rays.end());
  Integer total = 0;
  for (const auto& [cone, c] : terms) {
    std::vector<std::uint8_t> scratch(rest);
    total += c * degree(scratch, cone);
  }
  cache_.emplace(std::move(key), total);
  return total;
}

Integer IntersectionEngine::monomial_degree(std::span<const std::size_t> rays, Cone base) {
  if (rays.size() + base.dim() != fan_->rank())
    throw DimensionError("monomial_degree: number of divisors plus dim(base) must equal rank");
  if (!fan_->is_cone(base)) throw std::invalid_argument("monomial_degree: base is not a cone");
  std::vector<std::uint8_t> sorted;
  sorted.reserve(rays.size());
  for (auto r : rays) {
    if (r >= fan_->num_rays()) throw std::out_of_range("monomial_degree: unknown ray");
    sorted.push_back(static_cast<std::uint8_t>(r));
  }
  std::sort(sorted.begin(), sorted.end());
  return degree(sorted, base);
}

Integer IntersectionEngine::power_degree(std::size_t ray, std::size_t power, Cone base) {
  std::vector<std::size_t> rays(power, ray);
  return monomial_degree(rays, base);
}

Rational IntersectionEngine::intersection_number(std::span<const std::size_t> rays) {
  if (rays.size() != fan_->rank())
    throw DimensionError("intersection_number: need exactly rank() divisors");
  return Rational(monomial_degree(rays, Cone{}));
}

Rational IntersectionEngine::intersect_against_subvariety(std::span<const std::size_t> rays,
                                                          Cone tau) {
  return Rational(monomial_degree(rays, tau));
}

CurveClass curve_class_of_wall(const Fan& fan, Cone wall) {
  const WallRelation rel = wall_relation(fan, wall);
  return CurveClass{TorusCycle::orbit(wall), rel.curve_vector(fan.num_rays())};
}

}  // namespace toric
