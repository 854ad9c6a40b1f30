#include "walsh/spectrum_io.hpp"

#include <sstream>

#include "walsh/error.hpp"

namespace walsh {

nlohmann::json params_to_json(const Params& params) {
  nlohmann::json j;
  j["p"] = params.p;
  j["l"] = params.l;
  j["N"] = params.N;
  j["f"] = params.f;
  j["q_log"] = {{"p", params.p}, {"f", params.f}};
  j["q"] = to_decimal(params.q());
  j["h"] = params.h;
  j["a"] = to_decimal(params.a);
  j["b"] = to_decimal(params.b);
  j["case"] = params.special() ? "Special" : "Generic";
  if (params.special()) {
    j["delta"] = params.arith.delta == 0 ? nlohmann::json(nullptr) : nlohmann::json(params.arith.delta);
  } else {
    j["sqrt_minus_l"] = params.arith.sqrt_minus_l;
  }
  return j;
}

nlohmann::json convention_to_json(const Params& params) {
  nlohmann::json j;
  j["b"] = to_decimal(params.b);
  j["delta"] = params.special() && params.arith.delta != 0 ? nlohmann::json(params.arith.delta)
                                                           : nlohmann::json(nullptr);
  if (!params.special()) j["sqrt_minus_l"] = params.arith.sqrt_minus_l;
  j["source"] = params.convention_source;
  return j;
}

nlohmann::json spectrum_to_json(const SpectrumTable& table, unsigned digits) {
  nlohmann::json doc;
  doc["params"] = params_to_json(table.params);
  doc["convention"] = convention_to_json(table.params);
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& line : table.lines) {
    const MpComplex z = embed_complex(line.value, digits + 10);
    lines.push_back({{"k_class", line.label},
                     {"value", to_json(line.value)},
                     {"approx", {format_float(z.re, digits), format_float(z.im, digits)}},
                     {"frequency", to_decimal(line.frequency)}});
  }
  doc["lines"] = std::move(lines);
  doc["distinct_values"] = table.distinct_values();
  return doc;
}

std::string spectrum_to_csv(const SpectrumTable& table, unsigned digits) {
  std::ostringstream out;
  out << "k_class,value_symbolic,approx_re,approx_im,frequency\n";
  for (const auto& line : table.lines) {
    const MpComplex z = embed_complex(line.value, digits + 10);
    out << line.label << ',' << to_symbolic(line.value) << ',' << format_float(z.re, digits) << ','
        << format_float(z.im, digits) << ',' << to_decimal(line.frequency) << '\n';
  }
  return out.str();
}

std::string spectrum_to_text(const SpectrumTable& table, unsigned digits) {
  const Params& pr = table.params;
  std::ostringstream out;
  out << "p=" << pr.p << " l=" << pr.l << " f=" << pr.f << " h=" << pr.h << " a=" << pr.a << " b=" << pr.b;
  if (pr.special()) {
    out << " case=Special delta=" << pr.arith.delta;
  } else {
    out << " case=Generic sqrt(-l)=" << pr.arith.sqrt_minus_l;
  }
  out << " (" << pr.convention_source << ")\n";
  for (const auto& line : table.lines) {
    const MpComplex z = embed_complex(line.value, digits + 10);
    out << line.label << "\n  value     " << to_symbolic(line.value) << "\n  approx    "
        << format_float(z.re, digits) << " + " << format_float(z.im, digits) << "i\n  frequency "
        << to_decimal(line.frequency) << '\n';
  }
  out << "distinct values: " << table.distinct_values() << '\n';
  return out.str();
}

std::vector<SpectrumLine> lines_from_json(const nlohmann::json& doc) {
  std::vector<SpectrumLine> out;
  for (const auto& line : doc.at("lines")) {
    out.push_back({line.at("k_class").get<std::string>(), algnum_from_json(line.at("value")),
                   parse_decimal(line.at("frequency").get<std::string>())});
  }
  return out;
}

std::vector<SpectrumLine> lines_from_csv(const std::string& csv, std::uint64_t p, std::uint64_t l) {
  std::istringstream in(csv);
  std::string row;
  std::getline(in, row);
  if (row != "k_class,value_symbolic,approx_re,approx_im,frequency") {
    throw Error(Errc::InvalidInput, "unexpected CSV header");
  }
  std::vector<SpectrumLine> out;
  while (std::getline(in, row)) {
    if (row.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream cols(row);
    for (std::string cell; std::getline(cols, cell, ',');) cells.push_back(cell);
    if (cells.size() != 5) throw Error(Errc::InvalidInput, "CSV row needs 5 columns: " + row);
    out.push_back({cells[0], parse_symbolic(p, l, cells[1]), parse_decimal(cells[4])});
  }
  return out;
}

}  // namespace walsh
