#include "nlwave/serialize.hpp"

#include <string>

#include "nlwave/errors.hpp"

namespace nlwave {

nlohmann::json field_to_json(const SpectralField& field) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < field.size(); ++i) {
    entries.push_back({field.multi_index(i), field[i].real(), field[i].imag()});
  }
  return {{"dim", field.dim()},
          {"box_radius", field.box_radius()},
          {"real_flag", field.real_flag()},
          {"entries", std::move(entries)}};
}

SpectralField field_from_json(const nlohmann::json& j) {
  try {
    SpectralField field(j.at("dim").get<int>(), j.at("box_radius").get<int>(),
                        j.value("real_flag", false));
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 3) {
        throw ShapeError("field JSON: each entry must be [[k...], re, im]");
      }
      const std::vector<int> k = e[0].get<std::vector<int>>();
      field.at(k) = {e[1].get<double>(), e[2].get<double>()};
    }
    return field;
  } catch (const nlohmann::json::exception& ex) {
    throw ShapeError(std::string("field JSON: ") + ex.what());
  }
}

nlohmann::json snapshot_to_json(const SolutionSnapshot& snapshot) {
  nlohmann::json j = field_to_json(snapshot.field);
  j["t"] = snapshot.t;
  j["order"] = snapshot.order;
  return j;
}

SolutionSnapshot snapshot_from_json(const nlohmann::json& j) {
  try {
    return {j.at("t").get<double>(), j.at("order").get<int>(), field_from_json(j)};
  } catch (const nlohmann::json::exception& ex) {
    throw ShapeError(std::string("snapshot JSON: ") + ex.what());
  }
}

nlohmann::json table_to_json(const MultiplierTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (const MultiplierTable::Entry& e : table.entries()) {
    entries.push_back({e.norm2, e.value, std::string(to_string(e.path))});
  }
  return {{"n", table.params().n},
          {"delta", table.params().delta},
          {"beta", table.params().beta},
          {"box_radius", table.box_radius()},
          {"entries", std::move(entries)}};
}

}  // namespace nlwave
