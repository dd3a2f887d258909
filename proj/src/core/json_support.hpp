#pragma once

#include <json.hpp>

#include "closed_form.hpp"

namespace abflux::detail {

// JSON number at output precision.
nlohmann::ordered_json number(double value);

nlohmann::ordered_json potential_json(const PotentialSpec& potential);
nlohmann::ordered_json table_json(const SpectrumTable& table);

}  // namespace abflux::detail
