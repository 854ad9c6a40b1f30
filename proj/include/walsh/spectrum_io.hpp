#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "walsh/closed_form.hpp"

namespace walsh {

nlohmann::json params_to_json(const Params& params);
nlohmann::json convention_to_json(const Params& params);

// approx entries are decimal strings with `digits` significant digits.
nlohmann::json spectrum_to_json(const SpectrumTable& table, unsigned digits);
std::string spectrum_to_csv(const SpectrumTable& table, unsigned digits);
std::string spectrum_to_text(const SpectrumTable& table, unsigned digits);

// Lines recovered from either encoding (labels, exact values, frequencies).
std::vector<SpectrumLine> lines_from_json(const nlohmann::json& doc);
std::vector<SpectrumLine> lines_from_csv(const std::string& csv, std::uint64_t p, std::uint64_t l);

}  // namespace walsh
