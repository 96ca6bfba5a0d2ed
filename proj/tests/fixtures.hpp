#pragma once

#include <string>
#include <vector>

#include "toric/fan.hpp"

namespace fixtures {

using toric::Fan;
using toric::IntegerVector;
using toric::RaySpec;

inline std::vector<RaySpec> rays_of(const std::vector<std::pair<std::string, IntegerVector>>& rs) {
  std::vector<RaySpec> out;
  for (const auto& [n, v] : rs) out.push_back({n, v});
  return out;
}

// (1,0), (0,1), (-1,-1)
inline Fan p2() {
  return toric::build_fan(2, rays_of({{"a", {1, 0}}, {"b", {0, 1}}, {"c", {-1, -1}}}),
                          {{0, 1}, {1, 2}, {0, 2}});
}

// (1,0), (0,1), (-1,0), (0,-1)
inline Fan p1xp1() {
  return toric::build_fan(2, rays_of({{"a", {1, 0}}, {"b", {0, 1}}, {"c", {-1, 0}}, {"d", {0, -1}}}),
                          {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

// Hirzebruch surface F_a: (1,0), (0,1), (-1,a), (0,-1)
inline Fan hirzebruch(int a) {
  return toric::build_fan(2, rays_of({{"a", {1, 0}}, {"b", {0, 1}}, {"c", {-1, a}}, {"d", {0, -1}}}),
                          {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

inline std::size_t id(const Fan& f, const std::string& name) { return f.ray_id(name); }

inline toric::Cone cone(const Fan& f, std::initializer_list<const char*> names) {
  toric::Cone c;
  for (const char* n : names) c = c.with(f.ray_id(n));
  return c;
}

}  // namespace fixtures
