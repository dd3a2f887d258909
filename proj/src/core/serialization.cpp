#include "serialization.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "errors.hpp"
#include "json_support.hpp"

namespace abflux {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  // Normalise negative zero so output does not depend on rounding paths.
  if (std::string_view(buffer) == "-0") return "0";
  return buffer;
}

double round_to_output(double value) {
  if (!std::isfinite(value)) return value;
  return std::stod(format_number(value));
}

void validate_table(const SpectrumTable& table) {
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    if (!std::isfinite(row.energy) || !std::isfinite(row.gamma)) {
      throw DomainError("spectrum table: non-finite value in row " + std::to_string(i));
    }
    if (i > 0) {
      const auto& prev = table.rows[i - 1];
      if (std::tie(prev.n, prev.q, prev.k) >= std::tie(row.n, row.q, row.k)) {
        throw DomainError("spectrum table: rows not strictly sorted by (n, q, k)");
      }
    }
  }
}

std::string spectrum_to_csv(const SpectrumTable& table) {
  validate_table(table);
  std::string nu_text;
  std::string lambda_text;
  if (table.potential.is_well()) {
    nu_text = "inf";
  } else {
    nu_text = format_number(table.potential.power_law_params().nu);
    lambda_text = format_number(table.potential.power_law_params().lambda);
  }
  const std::string prefix = nu_text + "," + lambda_text + "," + format_number(table.mu0) + ",";
  std::ostringstream out;
  out << "nu,lambda,mu0,n,q,k,gamma,energy,unit\n";
  for (const auto& row : table.rows) {
    out << prefix << row.n << ',' << row.q << ',' << row.k << ',' << format_number(row.gamma)
        << ',' << format_number(row.energy) << ',' << table.unit.label << '\n';
  }
  return out.str();
}

std::string spectrum_to_json(const SpectrumTable& table) {
  validate_table(table);
  return detail::table_json(table).dump(2) + "\n";
}

SpectrumTable spectrum_from_json(std::string_view text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("spectrum json: ") + e.what());
  }
  try {
    SpectrumTable table;
    const auto& pot = doc.at("potential");
    const std::string kind = pot.at("kind").get<std::string>();
    if (kind == "power_law") {
      table.potential =
          PotentialSpec::power_law(pot.at("lambda").get<double>(), pot.at("nu").get<double>());
    } else if (kind == "infinite_well") {
      table.potential = PotentialSpec::infinite_well(pot.at("a").get<double>());
    } else {
      throw DomainError("spectrum json: unknown potential kind '" + kind + "'");
    }
    table.mu0 = doc.at("mu0").get<double>();
    table.unit.label = doc.at("unit").at("label").get<std::string>();
    table.unit.factor = doc.at("unit").at("factor").get<double>();
    table.method = parse_method(doc.at("method").get<std::string>());
    for (const auto& r : doc.at("rows")) {
      table.rows.push_back(SpectrumRow{r.at("n").get<int>(), r.at("q").get<int>(),
                                       r.at("k").get<int>(), r.at("gamma").get<double>(),
                                       r.at("energy").get<double>()});
    }
    validate_table(table);
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("spectrum json: ") + e.what());
  }
}

}  // namespace abflux
