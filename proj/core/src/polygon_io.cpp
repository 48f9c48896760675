#include "hypertile/polygon_io.hpp"

#include <nlohmann/json.hpp>

#include "hypertile/errors.hpp"

namespace hypertile {

using json = nlohmann::json;

std::string polygon_to_json(const Polygon& p) {
  json j;
  j["model"] = "hyperboloid";
  j["vertices"] = json::array();
  for (const HPoint& v : p.vertices()) {
    j["vertices"].push_back({v.x0(), v.x1(), v.x2()});
  }
  return j.dump(2);
}

Polygon polygon_from_json(const std::string& text) {
  std::vector<HPoint> vertices;
  try {
    json j = json::parse(text);
    if (j.at("model").get<std::string>() != "hyperboloid") {
      throw DataError("polygon JSON: unsupported model '" +
                      j.at("model").get<std::string>() + "'");
    }
    for (const auto& v : j.at("vertices")) {
      if (!v.is_array() || v.size() != 3) {
        throw DataError("polygon JSON: each vertex needs three coordinates");
      }
      vertices.push_back(HPoint::from_coords(
          v[0].get<double>(), v[1].get<double>(), v[2].get<double>()));
    }
  } catch (const json::exception& e) {
    throw DataError(std::string("polygon JSON: ") + e.what());
  }
  return Polygon(std::move(vertices));
}

}  // namespace hypertile
