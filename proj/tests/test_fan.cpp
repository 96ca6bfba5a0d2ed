#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "toric/catalog.hpp"

using namespace toric;
using fixtures::cone;
using fixtures::rays_of;

namespace {

FanError::Kind error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const FanError& e) {
    return e.kind();
  }
  FAIL("no FanError thrown");
  return FanError::Kind::Malformed;
}

Integer coefficient(const WallRelation& r, std::size_t id) {
  for (const auto& [x, a] : r.coefficients)
    if (x == id) return a;
  FAIL("ray not in wall");
  return 0;
}

std::vector<std::string> names(const Fan& f, Cone c) { return f.names_of(c); }

}  // namespace

TEST_CASE("build_fan accepts standard fans") {
  const Fan p2 = fixtures::p2();
  CHECK(p2.rank() == 2);
  CHECK(p2.num_rays() == 3);
  CHECK(p2.picard_number() == 1);
  CHECK(p2.maximal_cones().size() == 3);
  CHECK(p2.walls().size() == 3);
  CHECK(p2.boundary_faces().empty());
  CHECK(validate_complete(p2));
  CHECK(validate_complete(fixtures::p1xp1()));
}

TEST_CASE("build_fan rejects invalid input") {
  using K = FanError::Kind;
  CHECK(error_kind([] {
          build_fan(2, rays_of({{"a", {1, 0}}, {"b", {0, 1}}, {"c", {-1, -1}}}), {{0, 1}, {1, 2}});
        }) == K::Incomplete);
  CHECK(error_kind([] {
          build_fan(2, rays_of({{"a", {2, 0}}, {"b", {0, 1}}, {"c", {-1, -1}}}), {{0, 1}, {1, 2}, {0, 2}});
        }) == K::NonPrimitiveRay);
  CHECK(error_kind([] {
          build_fan(2, rays_of({{"a", {0, 0}}, {"b", {0, 1}}}), {{0, 1}});
        }) == K::NonPrimitiveRay);
  CHECK(error_kind([] {
          build_fan(2, rays_of({{"a", {1, 0}}, {"b", {1, 0}}, {"c", {-1, -1}}}), {{0, 1}, {1, 2}, {0, 2}});
        }) == K::DuplicateRay);
  // Cone((1,0),(1,2)) has determinant 2.
  CHECK(error_kind([] {
          build_fan(2, rays_of({{"a", {1, 0}}, {"b", {1, 2}}, {"c", {-1, -1}}}), {{0, 1}, {1, 2}, {0, 2}});
        }) == K::NonSmoothCone);
  CHECK(error_kind([] { build_fan(2, rays_of({{"a", {1, 0}}, {"b", {0, 1}}}), {{0, 1, 1}}); }) ==
        K::Malformed);
  CHECK(error_kind([] { build_fan(2, rays_of({{"a", {1, 0}}, {"b", {0, 1, 0}}}), {{0, 1}}); }) ==
        K::Malformed);
  CHECK(error_kind([] {
          build_fan(2, rays_of({{"a", {1, 0}}, {"a", {0, 1}}, {"c", {-1, -1}}}), {{0, 1}, {1, 2}, {0, 2}});
        }) == K::Malformed);
}

TEST_CASE("a face in three maximal cones is a bad wall") {
  // Three cones around the ray (1,0), overlapping.
  const auto rays = rays_of({{"a", {1, 0}}, {"b", {0, 1}}, {"c", {0, -1}}, {"d", {1, 1}}, {"e", {-1, 0}}});
  CHECK(error_kind([&] { build_fan(2, rays, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}}); }) ==
        FanError::Kind::BadWall);
}

TEST_CASE("validate_complete") {
  const Fan orthant = Fan::assemble(2, rays_of({{"a", {1, 0}}, {"b", {0, 1}}}), {{0, 1}});
  CHECK_FALSE(validate_complete(orthant));
  CHECK(orthant.boundary_faces().size() == 2);

  // Two opposite quadrants pair no walls but each face is a boundary.
  const Fan two = Fan::assemble(2, rays_of({{"a", {1, 0}}, {"b", {0, 1}}, {"c", {-1, 0}}, {"d", {0, -1}}}),
                                {{0, 1}, {2, 3}});
  CHECK_FALSE(validate_complete(two));

  const Fan hexagon = Fan::assemble(
      2,
      rays_of({{"a", {1, 0}}, {"b", {1, 1}}, {"c", {0, 1}}, {"d", {-1, 1}}, {"e", {-1, 0}}, {"f", {0, -1}}}),
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  CHECK(validate_complete(hexagon));

  // Every wall pairs up and is locally convex, but the cones wind twice
  // around the origin; only the coverage audit notices.
  const std::vector<IntegerVector> loop{{1, 0},   {-2, 1}, {-1, 0}, {-2, -1}, {-1, -1},
                                        {-1, -2}, {1, 1},  {0, 1},  {-1, 1},  {0, -1}};
  std::vector<RaySpec> rs;
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t i = 0; i < loop.size(); ++i) {
    rs.push_back({"r" + std::to_string(i), loop[i]});
    cones.push_back({i, (i + 1) % loop.size()});
  }
  const Fan twice = Fan::assemble(2, rs, cones);
  CHECK(twice.boundary_faces().empty());
  CHECK(twice.overfull_faces().empty());
  CHECK_FALSE(validate_complete(twice));
  CHECK(error_kind([&] { build_fan(2, rs, cones); }) == FanError::Kind::Incomplete);
}

TEST_CASE("wall relations") {
  const Fan p2 = fixtures::p2();
  const auto r = wall_relation(p2, cone(p2, {"a"}));
  CHECK(coefficient(r, p2.ray_id("a")) == 1);
  CHECK(anticanonical_degree_of_wall(p2, cone(p2, {"a"})) == 3);
  for (Cone w : p2.walls()) CHECK(anticanonical_degree_of_wall(p2, w) == 3);

  const Fan q = fixtures::p1xp1();
  CHECK(coefficient(wall_relation(q, cone(q, {"a"})), q.ray_id("a")) == 0);
  for (Cone w : q.walls()) CHECK(anticanonical_degree_of_wall(q, w) == 2);

  for (int a = 0; a <= 4; ++a) {
    const Fan f = fixtures::hirzebruch(a);
    CHECK(coefficient(wall_relation(f, cone(f, {"b"})), f.ray_id("b")) == -a);
  }
  const Fan f2 = fixtures::hirzebruch(2);
  CHECK(anticanonical_degree_of_wall(f2, cone(f2, {"b"})) == 0);

  CHECK_THROWS_AS(wall_relation(p2, cone(p2, {"a", "b"})), std::invalid_argument);
}

TEST_CASE("wall relations sum to zero on catalog fans") {
  for (const auto& params : grid(BundleBounds{2, 5, 2, 4, 2})) {
    const Fan fan = build(params);
    std::size_t incidences = 0;
    for (Cone w : fan.walls()) {
      incidences += 2;
      const auto r = wall_relation(fan, w);
      IntegerVector s = add(fan.ray(r.opposite.first).vector, fan.ray(r.opposite.second).vector);
      for (const auto& [x, a] : r.coefficients) s = add(s, scale(a, fan.ray(x).vector));
      CHECK(is_zero(s));
    }
    CHECK(incidences == fan.rank() * fan.maximal_cones().size());
  }
}

TEST_CASE("primitive collections") {
  const Fan p2 = fixtures::p2();
  const auto pc = primitive_collections(p2);
  REQUIRE(pc.size() == 1);
  CHECK(pc[0].rays.dim() == 3);

  const Fan q = fixtures::p1xp1();
  const auto qc = primitive_collections(q);
  REQUIRE(qc.size() == 2);
  CHECK(names(q, qc[0].rays) == std::vector<std::string>{"a", "c"});
  CHECK(names(q, qc[1].rays) == std::vector<std::string>{"b", "d"});

  const BatyrevParams bp{{1, 2, 2, 1, 2}, {0}, {1}};
  const Fan b = batyrev_picard3(bp);
  const auto bc = primitive_collections(b);
  std::vector<std::vector<std::string>> got;
  for (const auto& p : bc) got.push_back(names(b, p.rays));
  std::sort(got.begin(), got.end());
  std::vector<std::vector<std::string>> want{{"v1", "y1", "y2"},
                                             {"y1", "y2", "z1", "z2"},
                                             {"z1", "z2", "t1"},
                                             {"t1", "u1", "u2"},
                                             {"v1", "u1", "u2"}};
  std::sort(want.begin(), want.end());
  CHECK(got == want);
}

TEST_CASE("primitive collections are minimal non-faces") {
  for (const auto& params : grid(BatyrevBounds{2, 2, 1})) {
    const Fan fan = build(params);
    for (const auto& p : primitive_collections(fan)) {
      CHECK_FALSE(fan.is_cone(p.rays));
      for (auto x : p.rays.ids()) CHECK(fan.is_cone(p.rays.without(x)));
    }
  }
}

TEST_CASE("primitive relations") {
  const Fan p2 = fixtures::p2();
  const auto r = primitive_relations(p2);
  REQUIRE(r.size() == 1);
  CHECK(r[0].sigma.empty());
  CHECK(r[0].coefficients.empty());
  CHECK(r[0].degree == 3);

  for (int d = 3; d <= 6; ++d)
    for (int a = 0; a <= 3; ++a) {
      const Fan f = kleinschmidt_bundle({d, 2, {a}});
      bool found = false;
      for (const auto& rel : primitive_relations(f)) {
        if (rel.collection.rays.dim() != static_cast<std::size_t>(d)) continue;
        found = true;
        CHECK(rel.degree == d - a);
        if (a == 0) {
          CHECK(rel.sigma.empty());
        } else {
          CHECK(names(f, rel.sigma) == std::vector<std::string>{"y1"});
          REQUIRE(rel.coefficients.size() == 1);
          CHECK(rel.coefficients[0].second == a);
        }
      }
      CHECK(found);
    }

  const BatyrevParams bp{{1, 1, 2, 2, 1}, {0, 1}, {2}};
  const Fan b = batyrev_picard3(bp);
  bool zt = false;
  for (const auto& rel : primitive_relations(b))
    if (names(b, rel.collection.rays) == std::vector<std::string>{"z1", "z2", "t1", "t2"}) {
      zt = true;
      CHECK(rel.sigma.empty());
      CHECK(rel.degree == 4);
    }
  CHECK(zt);
}

TEST_CASE("primitive relations hold exactly and are disjoint from sigma") {
  for (const auto& params : grid(BatyrevBounds{2, 2, 2})) {
    const Fan fan = build(params);
    for (const auto& rel : primitive_relations(fan)) {
      IntegerVector s(fan.rank(), 0);
      for (auto x : rel.collection.rays.ids()) s = add(s, fan.ray(x).vector);
      Integer sum_a = 0;
      for (const auto& [y, a] : rel.coefficients) {
        CHECK(a >= 1);
        sum_a += a;
        s = add(s, scale(-a, fan.ray(y).vector));
      }
      CHECK(is_zero(s));
      CHECK(rel.collection.rays.disjoint(rel.sigma));
      CHECK(rel.degree == Integer(rel.collection.rays.dim()) - sum_a);
    }
  }
}

TEST_CASE("Fano and weak Fano") {
  for (int d = 1; d <= 5; ++d) CHECK(is_fano(projective_space(d)));
  CHECK(is_fano(kleinschmidt_bundle({5, 2, {1}})));
  CHECK_FALSE(is_fano(example_41(4, 3)));
  CHECK(is_fano(example_41(4, 2)));
  CHECK(is_fano(fixtures::hirzebruch(1)));
  CHECK_FALSE(is_fano(fixtures::hirzebruch(2)));
  CHECK(is_weak_fano(fixtures::hirzebruch(2)));
  CHECK_FALSE(is_weak_fano(fixtures::hirzebruch(3)));
}

TEST_CASE("is_fano agrees with the wall test on catalog fans") {
  std::vector<CatalogParams> all = grid(ProjectiveSpaceBounds{1, 5});
  for (auto& p : grid(BundleBounds{2, 6, 2, 4, 3})) all.push_back(p);
  for (auto& p : grid(Example41Bounds{3, 5, 1, 3})) all.push_back(p);
  for (auto& p : grid(BatyrevBounds{2, 2, 2})) all.push_back(p);
  for (const auto& params : all) {
    const Fan fan = build(params);
    bool walls_positive = true;
    for (Cone w : fan.walls()) walls_positive = walls_positive && anticanonical_degree_of_wall(fan, w) > 0;
    CHECK(is_fano(fan) == walls_positive);
  }
}

TEST_CASE("fiber-type relations") {
  CHECK(has_fiber_type_relation(fixtures::p1xp1()));
  CHECK(has_fiber_type_relation(batyrev_picard3({{1, 1, 2, 1, 1}, {0}, {0}})));
  // F_1: relations a + c = b and b + d = 0; the second has empty right side.
  CHECK(has_fiber_type_relation(fixtures::hirzebruch(1)));
  // The hexagon: opposite rays give a + d = 0.
  const Fan dp = build_fan(
      2, rays_of({{"a", {1, 0}}, {"b", {1, 1}}, {"c", {0, 1}}, {"d", {-1, 0}}, {"e", {-1, -1}}, {"f", {0, -1}}}),
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  CHECK(has_fiber_type_relation(dp));
  bool found = false;
  for (const auto& r : primitive_relations(dp))
    if (dp.names_of(r.collection.rays) == std::vector<std::string>{"a", "d"}) {
      found = true;
      CHECK(r.degree == 2);
    }
  CHECK(found);
}

TEST_CASE("projectivity") {
  for (int d = 1; d <= 5; ++d) {
    const auto r = is_projective(projective_space(d));
    CHECK(r.projective);
    REQUIRE(r.ample_witness);
  }
  CHECK(is_projective(kleinschmidt_bundle({5, 2, {1}})).projective);
  for (int a = 0; a <= 5; ++a) CHECK(is_projective(fixtures::hirzebruch(a)).projective);

  // The witness is positive on every wall curve.
  const Fan f = example_41(4, 3);
  const auto r = is_projective(f);
  REQUIRE(r.ample_witness);
  for (Cone w : f.walls()) {
    const auto curve = wall_relation(f, w).curve_vector(f.num_rays());
    Rational s = 0;
    for (std::size_t x = 0; x < f.num_rays(); ++x) s += (*r.ample_witness)[x] * curve[x];
    CHECK(s > 0);
  }
}

TEST_CASE("unimodular transforms preserve the combinatorics") {
  const Fan f = example_41(4, 2);
  const IntegerMatrix g{{1, 2, 0, 0}, {0, 1, 0, 0}, {0, 3, 1, 0}, {1, 0, 0, 1}};
  const Fan h = transform_fan(f, g);
  CHECK(h.walls().size() == f.walls().size());
  for (std::size_t i = 0; i < f.walls().size(); ++i) {
    const auto a = wall_relation(f, f.walls()[i]), b = wall_relation(h, h.walls()[i]);
    CHECK(a.coefficients == b.coefficients);
  }
  CHECK_THROWS_AS(transform_fan(f, {{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
                  NotUnimodularError);
}
