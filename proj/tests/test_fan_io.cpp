#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "fixtures.hpp"
#include "toric/catalog.hpp"
#include "toric/fan_io.hpp"

using namespace toric;

namespace {

FanError::Kind kind_of(const nlohmann::json& j) {
  try {
    fan_from_json(j);
  } catch (const FanError& e) {
    return e.kind();
  }
  FAIL("expected a FanError");
  return FanError::Kind::Malformed;
}

}  // namespace

TEST_CASE("round trip through JSON") {
  for (const auto& params : grid(BatyrevBounds{2, 2, 1})) {
    const Fan f = build(params);
    const Fan g = fan_from_json(nlohmann::json::parse(fan_to_json(f).dump()));
    REQUIRE(g.num_rays() == f.num_rays());
    for (std::size_t x = 0; x < f.num_rays(); ++x) {
      CHECK(g.ray(x).name == f.ray(x).name);
      CHECK(g.ray(x).vector == f.ray(x).vector);
    }
    CHECK(g.maximal_cones() == f.maximal_cones());
  }
}

TEST_CASE("schema violations are Malformed") {
  using K = FanError::Kind;
  const nlohmann::json good = fan_to_json(fixtures::p2());
  CHECK(kind_of(nlohmann::json::array()) == K::Malformed);
  for (const char* key : {"rank", "rays", "maximal_cones"}) {
    auto j = good;
    j.erase(key);
    CHECK(kind_of(j) == K::Malformed);
  }
  auto j = good;
  j["rank"] = 0;
  CHECK(kind_of(j) == K::Malformed);
  j = good;
  j["rays"][0]["vector"][0] = 1.5;
  CHECK(kind_of(j) == K::Malformed);
  j = good;
  j["rays"][0]["vector"][0] = "x";
  CHECK(kind_of(j) == K::Malformed);
  j = good;
  j["maximal_cones"][0][0] = -1;
  CHECK(kind_of(j) == K::Malformed);
  j = good;
  j["maximal_cones"][0][0] = 9;
  CHECK_THROWS_AS(fan_from_json(j), FanError);
  j = good;
  j["rays"][1]["vector"] = {2, 0};
  CHECK(kind_of(j) == K::NonPrimitiveRay);
}

TEST_CASE("large coordinates are written as strings") {
  const Integer big = (Integer(1) << 70) + 1;
  const Fan f = build_fan(2, fixtures::rays_of({{"a", {1, 0}}, {"b", {big, 1}}, {"c", {-1 - big, -1}}}),
                          {{0, 1}, {1, 2}, {2, 0}});
  const auto j = fan_to_json(f);
  CHECK(j["rays"][1]["vector"][0].is_string());
  CHECK(j["rays"][0]["vector"][0].is_number_integer());
  const Fan g = fan_from_json(j);
  CHECK(g.ray(1).vector[0] == big);
}

TEST_CASE("load_fan_file") {
  CHECK_THROWS_AS(load_fan_file("/nonexistent/fan.json"), std::runtime_error);
  const std::string path = "test_fan_io_tmp.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  try {
    load_fan_file(path);
    FAIL("expected a FanError");
  } catch (const FanError& e) {
    CHECK(e.kind() == FanError::Kind::Malformed);
  }
  {
    std::ofstream out(path);
    out << fan_to_json(projective_space(3)).dump(2);
  }
  CHECK(load_fan_file(path).num_rays() == 4);
  std::remove(path.c_str());
}
