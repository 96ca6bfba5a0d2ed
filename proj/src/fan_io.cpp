#include "toric/fan_io.hpp"

#include <fstream>
#include <limits>

namespace toric {

namespace {

nlohmann::json integer_to_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(z);
  return z.str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::runtime_error&) {
    }
  }
  throw FanError(FanError::Kind::Malformed, "ray coordinates must be integers");
}

}  // namespace

nlohmann::json fan_to_json(const Fan& fan) {
  nlohmann::json rays = nlohmann::json::array();
  for (const auto& r : fan.rays()) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& x : r.vector) v.push_back(integer_to_json(x));
    rays.push_back({{"name", r.name}, {"vector", v}});
  }
  nlohmann::json cones = nlohmann::json::array();
  for (Cone c : fan.maximal_cones()) cones.push_back(c.ids());
  return {{"rank", fan.rank()}, {"rays", rays}, {"maximal_cones", cones}};
}

Fan fan_from_json(const nlohmann::json& j) {
  using K = FanError::Kind;
  if (!j.is_object() || !j.contains("rank") || !j.contains("rays") || !j.contains("maximal_cones"))
    throw FanError(K::Malformed, "fan JSON needs rank, rays and maximal_cones");
  if (!j["rank"].is_number_integer() || j["rank"].get<std::int64_t>() < 1)
    throw FanError(K::Malformed, "rank must be a positive integer");
  const auto rank = j["rank"].get<std::size_t>();
  if (!j["rays"].is_array() || !j["maximal_cones"].is_array())
    throw FanError(K::Malformed, "rays and maximal_cones must be arrays");

  std::vector<RaySpec> rays;
  for (const auto& r : j["rays"]) {
    if (!r.is_object() || !r.contains("vector") || !r["vector"].is_array())
      throw FanError(K::Malformed, "each ray needs a vector");
    RaySpec spec;
    if (r.contains("name")) {
      if (!r["name"].is_string()) throw FanError(K::Malformed, "ray name must be a string");
      spec.name = r["name"].get<std::string>();
    }
    for (const auto& x : r["vector"]) spec.vector.push_back(integer_from_json(x));
    rays.push_back(std::move(spec));
  }
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& c : j["maximal_cones"]) {
    if (!c.is_array()) throw FanError(K::Malformed, "each maximal cone must be an index list");
    std::vector<std::size_t> ids;
    for (const auto& x : c) {
      if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
        throw FanError(K::Malformed, "cone indices must be non-negative integers");
      ids.push_back(x.get<std::size_t>());
    }
    cones.push_back(std::move(ids));
  }
  return build_fan(rank, std::move(rays), std::move(cones));
}

Fan load_fan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fan file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw FanError(FanError::Kind::Malformed, std::string("malformed JSON: ") + e.what());
  }
  return fan_from_json(j);
}

}  // namespace toric
