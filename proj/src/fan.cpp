#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>

namespace toric {

namespace {

std::size_t position_in(Cone c, std::size_t id) {
  return static_cast<std::size_t>(std::popcount(c.mask() & ((std::uint64_t{1} << id) - 1)));
}

constexpr std::uint64_t kAuditSeed = 0x5eed'c0de'2024ULL;
constexpr int kAuditSamples = 100;
constexpr int kAuditRange = 1000;

}  // namespace

Integer WallRelation::anticanonical_degree() const {
  Integer s = 2;
  for (const auto& [id, a] : coefficients) s += a;
  return s;
}

IntegerVector WallRelation::curve_vector(std::size_t num_rays) const {
  IntegerVector v(num_rays, 0);
  v.at(opposite.first) = 1;
  v.at(opposite.second) = 1;
  for (const auto& [id, a] : coefficients) v.at(id) = a;
  return v;
}

Fan Fan::assemble(std::size_t rank, std::vector<RaySpec> rays,
                  std::vector<std::vector<std::size_t>> maximal_cones) {
  using K = FanError::Kind;
  if (rank == 0) throw FanError(K::Malformed, "rank must be positive");
  if (rays.size() > kMaxRays)
    throw FanError(K::Malformed, "at most " + std::to_string(kMaxRays) + " rays are supported");

  Fan fan;
  fan.rank_ = rank;
  std::set<IntegerVector> seen_vectors;
  std::set<std::string> seen_names;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    auto& r = rays[i];
    if (r.vector.size() != rank)
      throw FanError(K::Malformed, "ray '" + r.name + "' has wrong length");
    if (r.name.empty()) r.name = "r" + std::to_string(i);
    if (!seen_names.insert(r.name).second)
      throw FanError(K::Malformed, "duplicate ray name '" + r.name + "'");
    if (gcd_of(r.vector) != 1)
      throw FanError(K::NonPrimitiveRay, "ray '" + r.name + "' is zero or not primitive");
    if (!seen_vectors.insert(r.vector).second)
      throw FanError(K::DuplicateRay, "ray '" + r.name + "' duplicates another ray");
    fan.rays_.push_back(Ray{i, std::move(r.name), std::move(r.vector)});
  }

  std::set<std::uint64_t> seen_cones;
  std::uint64_t used = 0;
  for (const auto& ids : maximal_cones) {
    if (ids.size() != rank)
      throw FanError(K::Malformed, "maximal cones must have exactly rank generators");
    for (auto id : ids)
      if (id >= fan.rays_.size()) throw FanError(K::Malformed, "cone refers to unknown ray");
    const Cone c = Cone::of(ids);
    if (c.dim() != rank) throw FanError(K::Malformed, "cone lists a ray twice");
    if (!seen_cones.insert(c.mask()).second)
      throw FanError(K::Malformed, "maximal cone listed twice");
    used |= c.mask();
    fan.maximal_.push_back(c);
  }
  if (fan.maximal_.empty()) throw FanError(K::Malformed, "fan has no maximal cones");
  if (used != (fan.rays_.size() == 64 ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << fan.rays_.size()) - 1))
    throw FanError(K::Malformed, "some ray lies in no maximal cone");

  const std::size_t n = fan.rays_.size();
  for (std::size_t ci = 0; ci < fan.maximal_.size(); ++ci) {
    const Cone c = fan.maximal_[ci];
    IntegerMatrix basis;
    for (auto id : c.ids()) basis.push_back(fan.rays_[id].vector);
    std::vector<Covector> duals;
    try {
      duals = dual_basis(basis);
    } catch (const NotUnimodularError&) {
      std::string names;
      for (auto id : c.ids()) names += (names.empty() ? "" : ",") + fan.rays_[id].name;
      throw FanError(K::NonSmoothCone, "cone {" + names + "} is not smooth");
    }
    std::vector<std::vector<Integer>> table(rank, std::vector<Integer>(n));
    for (std::size_t k = 0; k < rank; ++k)
      for (std::size_t u = 0; u < n; ++u) table[k][u] = duals[k].pair(fan.rays_[u].vector);
    fan.dual_.push_back(std::move(table));
    fan.dual_covectors_.push_back(std::move(duals));

    const std::uint64_t mask = c.mask();
    for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
      fan.faces_[sub].push_back(ci);
      if (sub == 0) break;
    }
  }

  fan.by_dim_.assign(rank + 1, {});
  for (const auto& [mask, containing] : fan.faces_) {
    const Cone c = Cone::from_mask(mask);
    fan.by_dim_[c.dim()].push_back(c);
  }
  for (auto& v : fan.by_dim_) std::sort(v.begin(), v.end(), ConeLess{});
  for (Cone c : fan.by_dim_[rank - 1]) {
    const auto count = fan.faces_.at(c.mask()).size();
    if (count == 2)
      fan.walls_.push_back(c);
    else if (count == 1)
      fan.boundary_.push_back(c);
    else
      fan.overfull_.push_back(c);
  }
  return fan;
}

std::size_t Fan::ray_id(const std::string& name) const {
  if (auto id = find_ray(name)) return *id;
  throw std::out_of_range("no ray named '" + name + "'");
}

std::optional<std::size_t> Fan::find_ray(const std::string& name) const {
  for (const auto& r : rays_)
    if (r.name == name) return r.id;
  return std::nullopt;
}

std::span<const std::size_t> Fan::containing_maximal(Cone c) const {
  auto it = faces_.find(c.mask());
  if (it == faces_.end()) return {};
  return it->second;
}

const Integer& Fan::dual_pairing(std::size_t cone_index, std::size_t ray, std::size_t u) const {
  const Cone c = maximal_.at(cone_index);
  if (!c.contains(ray)) throw std::invalid_argument("dual_pairing: ray not a generator of cone");
  return dual_[cone_index][position_in(c, ray)].at(u);
}

IntegerVector Fan::coordinates(std::size_t cone_index, const IntegerVector& v) const {
  const auto& duals = dual_covectors_.at(cone_index);
  IntegerVector out;
  out.reserve(duals.size());
  for (const auto& m : duals) out.push_back(m.pair(v));
  return out;
}

Cone Fan::cone_of_names(std::span<const std::string> names) const {
  Cone c;
  for (const auto& nm : names) c = c.with(ray_id(nm));
  return c;
}

std::vector<std::string> Fan::names_of(Cone c) const {
  std::vector<std::string> out;
  for (auto id : c.ids()) out.push_back(rays_.at(id).name);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool dual_graph_connected(const Fan& fan) {
  const auto& maxc = fan.maximal_cones();
  std::vector<std::vector<std::size_t>> adj(maxc.size());
  for (Cone w : fan.walls()) {
    auto cs = fan.containing_maximal(w);
    adj[cs[0]].push_back(cs[1]);
    adj[cs[1]].push_back(cs[0]);
  }
  std::vector<bool> seen(maxc.size(), false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    auto c = q.front();
    q.pop();
    for (auto nb : adj[c])
      if (!seen[nb]) {
        seen[nb] = true;
        ++count;
        q.push(nb);
      }
  }
  return count == maxc.size();
}

// The two maximal cones at a wall must lie on opposite sides of it.
bool wall_locally_convex(const Fan& fan, Cone w) {
  auto cs = fan.containing_maximal(w);
  const Cone c1 = fan.maximal_cones()[cs[0]];
  const Cone c2 = fan.maximal_cones()[cs[1]];
  const std::size_t y1 = c1.minus(w).ids().front();
  const std::size_t y2 = c2.minus(w).ids().front();
  return fan.dual_pairing(cs[0], y1, y2) == -1;
}

bool audit_coverage(const Fan& fan) {
  std::mt19937_64 rng(kAuditSeed);
  std::uniform_int_distribution<int> coord(-kAuditRange, kAuditRange);
  const std::size_t d = fan.rank();
  for (int s = 0; s < kAuditSamples; ++s) {
    IntegerVector p(d);
    for (auto& x : p) x = coord(rng);
    if (is_zero(p)) continue;
    int covering = 0, interior = 0;
    for (std::size_t ci = 0; ci < fan.maximal_cones().size(); ++ci) {
      bool inside = true, strictly = true;
      for (std::size_t k = 0; k < d && inside; ++k) {
        const Integer x = fan.dual_covector(ci, k).pair(p);
        if (x < 0) inside = false;
        if (x == 0) strictly = false;
      }
      if (inside) {
        ++covering;
        if (strictly) ++interior;
      }
    }
    if (covering == 0 || interior > 1) return false;
  }
  return true;
}

}  // namespace

bool validate_complete(const Fan& fan) {
  if (!fan.boundary_faces().empty() || !fan.overfull_faces().empty()) return false;
  if (!dual_graph_connected(fan)) return false;
  for (Cone w : fan.walls())
    if (!wall_locally_convex(fan, w)) return false;
  return audit_coverage(fan);
}

Fan build_fan(std::size_t rank, std::vector<RaySpec> rays,
              std::vector<std::vector<std::size_t>> maximal_cones) {
  Fan fan = Fan::assemble(rank, std::move(rays), std::move(maximal_cones));
  if (!fan.overfull_faces().empty())
    throw FanError(FanError::Kind::BadWall, "a codimension-one face lies in more than two maximal cones");
  if (!validate_complete(fan))
    throw FanError(FanError::Kind::Incomplete, "fan is not complete");
  return fan;
}

WallRelation wall_relation(const Fan& fan, Cone wall) {
  auto cs = fan.containing_maximal(wall);
  if (wall.dim() + 1 != fan.rank() || cs.size() != 2)
    throw std::invalid_argument("wall_relation: cone is not a wall");
  const Cone c1 = fan.maximal_cones()[cs[0]];
  const Cone c2 = fan.maximal_cones()[cs[1]];
  WallRelation rel;
  rel.wall = wall;
  rel.opposite = {c1.minus(wall).ids().front(), c2.minus(wall).ids().front()};
  if (fan.dual_pairing(cs[0], rel.opposite.first, rel.opposite.second) != -1)
    throw FanError(FanError::Kind::BadWall, "maximal cones overlap across a wall");
  // y2 = -y1 + sum c_i x_i in the basis of c1, hence a_i = -c_i.
  for (auto x : wall.ids())
    rel.coefficients.emplace_back(x, -fan.dual_pairing(cs[0], x, rel.opposite.second));
  return rel;
}

Integer anticanonical_degree_of_wall(const Fan& fan, Cone wall) {
  return wall_relation(fan, wall).anticanonical_degree();
}

ProjectivityResult is_projective(const Fan& fan) {
  // Every divisor class has a unique representative vanishing on the rays of
  // one maximal cone, so only the remaining Picard-number many coefficients
  // are unknowns.
  const Cone fixed = fan.maximal_cones().front();
  std::vector<std::size_t> free_rays;
  for (std::size_t x = 0; x < fan.num_rays(); ++x)
    if (!fixed.contains(x)) free_rays.push_back(x);

  std::set<IntegerVector> rows;
  for (Cone w : fan.walls()) {
    const IntegerVector curve = wall_relation(fan, w).curve_vector(fan.num_rays());
    IntegerVector row;
    row.reserve(free_rays.size());
    for (auto x : free_rays) row.push_back(curve[x]);
    rows.insert(std::move(row));
  }
  std::vector<LinearConstraint> constraints;
  constraints.reserve(rows.size());
  for (const auto& r : rows) constraints.push_back({Covector{r}, ConstraintKind::Positive});
  const auto solution = lp_feasible_strict(constraints, free_rays.size());

  ProjectivityResult out;
  out.projective = solution.has_value();
  if (solution) {
    std::vector<Rational> witness(fan.num_rays(), Rational(0));
    for (std::size_t i = 0; i < free_rays.size(); ++i) witness[free_rays[i]] = (*solution)[i];
    out.ample_witness = std::move(witness);
  }
  return out;
}

std::vector<PrimitiveCollection> primitive_collections(const Fan& fan) {
  std::vector<PrimitiveCollection> out;
  const std::size_t n = fan.num_rays();
  // Grow each cone of size k-1 by one larger ray id; every candidate arises
  // exactly once from its subset without the largest element.
  for (std::size_t k = 2; k <= fan.rank() + 1; ++k) {
    for (Cone base : fan.cones_of_dim(k - 1)) {
      const auto ids = base.ids();
      for (std::size_t r = ids.back() + 1; r < n; ++r) {
        const Cone cand = base.with(r);
        if (fan.is_cone(cand)) continue;
        bool minimal = true;
        for (auto x : ids)
          if (!fan.is_cone(cand.without(x))) {
            minimal = false;
            break;
          }
        if (minimal) out.push_back({cand});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PrimitiveCollection& a, const PrimitiveCollection& b) {
    return lex_less(a.rays, b.rays);
  });
  return out;
}

PrimitiveRelation primitive_relation(const Fan& fan, const PrimitiveCollection& p) {
  IntegerVector sum(fan.rank(), 0);
  for (auto id : p.rays.ids()) sum = add(sum, fan.ray(id).vector);
  for (std::size_t ci = 0; ci < fan.maximal_cones().size(); ++ci) {
    const auto coords = fan.coordinates(ci, sum);
    if (!std::all_of(coords.begin(), coords.end(), [](const Integer& x) { return x >= 0; }))
      continue;
    PrimitiveRelation rel;
    rel.collection = p;
    rel.degree = static_cast<long>(p.rays.dim());
    const auto ids = fan.maximal_cones()[ci].ids();
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (coords[k] == 0) continue;
      rel.sigma = rel.sigma.with(ids[k]);
      rel.coefficients.emplace_back(ids[k], coords[k]);
      rel.degree -= coords[k];
    }
    return rel;
  }
  throw FanError(FanError::Kind::Incomplete, "primitive relation: sum lies in no cone");
}

std::vector<PrimitiveRelation> primitive_relations(const Fan& fan) {
  std::vector<PrimitiveRelation> out;
  for (const auto& p : primitive_collections(fan)) out.push_back(primitive_relation(fan, p));
  return out;
}

bool is_fano(const Fan& fan) {
  for (const auto& rel : primitive_relations(fan))
    if (rel.degree <= 0) return false;
  return true;
}

bool is_weak_fano(const Fan& fan) {
  for (Cone w : fan.walls())
    if (anticanonical_degree_of_wall(fan, w) < 0) return false;
  return true;
}

bool has_fiber_type_relation(const Fan& fan) {
  for (const auto& rel : primitive_relations(fan))
    if (rel.sigma.empty()) return true;
  return false;
}

Fan transform_fan(const Fan& fan, const IntegerMatrix& g) {
  const Integer det = determinant(g);
  if (det != 1 && det != -1) throw NotUnimodularError("transform_fan: matrix is not unimodular");
  std::vector<RaySpec> rays;
  for (const auto& r : fan.rays()) rays.push_back({r.name, mat_vec(g, r.vector)});
  std::vector<std::vector<std::size_t>> cones;
  for (Cone c : fan.maximal_cones()) cones.push_back(c.ids());
  return build_fan(fan.rank(), std::move(rays), std::move(cones));
}

}  // namespace toric
