#include "json_support.hpp"

#include "serialization.hpp"

namespace abflux::detail {

nlohmann::ordered_json number(double value) { return round_to_output(value); }

nlohmann::ordered_json potential_json(const PotentialSpec& potential) {
  nlohmann::ordered_json out;
  if (potential.is_well()) {
    out["kind"] = "infinite_well";
    out["a"] = number(potential.well_params().radius);
  } else {
    out["kind"] = "power_law";
    out["lambda"] = number(potential.power_law_params().lambda);
    out["nu"] = number(potential.power_law_params().nu);
  }
  return out;
}

nlohmann::ordered_json table_json(const SpectrumTable& table) {
  nlohmann::ordered_json out;
  out["potential"] = potential_json(table.potential);
  out["mu0"] = number(table.mu0);
  out["unit"] = {{"label", table.unit.label}, {"factor", number(table.unit.factor)}};
  out["method"] = std::string(method_name(table.method));
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    rows.push_back({{"n", row.n},
                    {"q", row.q},
                    {"k", row.k},
                    {"gamma", number(row.gamma)},
                    {"energy", number(row.energy)}});
  }
  out["rows"] = std::move(rows);
  return out;
}

}  // namespace abflux::detail
