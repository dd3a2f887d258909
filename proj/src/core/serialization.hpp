#pragma once

#include <string>
#include <string_view>

#include "closed_form.hpp"

namespace abflux {

/// Fixed float formatting used by every text output: 12 significant digits.
std::string format_number(double value);

/// value rounded to the precision format_number emits.
double round_to_output(double value);

/// Throws DomainError unless rows are sorted by (n, q, k), unique and finite.
void validate_table(const SpectrumTable& table);

/// Header: nu,lambda,mu0,n,q,k,gamma,energy,unit
std::string spectrum_to_csv(const SpectrumTable& table);

std::string spectrum_to_json(const SpectrumTable& table);

/// Inverse of spectrum_to_json (numbers come back at output precision).
SpectrumTable spectrum_from_json(std::string_view text);

}  // namespace abflux
