#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "walsh/closed_form.hpp"
#include "walsh/error.hpp"
#include "walsh/gauss.hpp"
#include "walsh/oracle.hpp"
#include "walsh/spectrum_io.hpp"
#include "walsh/verify.hpp"

namespace walsh::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flattens nested objects into dotted keys; arrays are kept as JSON text.
void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    }
    return;
  }
  rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
  return quoted + "\"";
}

std::string render_record(const json& j, Format format) {
  if (format == Format::Json) return j.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::ostringstream s;
  if (format == Format::Csv) {
    s << "key,value\n";
    for (const auto& [k, v] : rows) s << csv_field(k) << ',' << csv_field(v) << '\n';
  } else {
    std::size_t width = 0;
    for (const auto& row : rows) width = std::max(width, row.first.size());
    for (const auto& [k, v] : rows) s << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }
  return s.str();
}

// Rows of equal-width cells: header first.
std::string render_rows(const std::vector<std::vector<std::string>>& rows, Format format) {
  std::ostringstream s;
  if (format == Format::Csv) {
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) s << (i ? "," : "") << csv_field(row[i]);
      s << '\n';
    }
    return s.str();
  }
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      s << row[i];
      if (i + 1 < row.size()) s << std::string(width[i] - row[i].size() + 2, ' ');
    }
    s << '\n';
  }
  return s.str();
}

Params instance(const RunConfig& config) {
  if (!config.p || !config.l) throw UsageError("--p and --l are required");
  const Params base = validate_instance(*config.p, *config.l);
  return resolve_convention(base, config.verify_bound, config.seed);
}

json approx_pair(const MpComplex& z, unsigned digits) {
  return json::array({format_float(z.re, digits), format_float(z.im, digits)});
}

struct Result {
  std::string text;
  int status = kOk;
};

Result cmd_params(const RunConfig& config) {
  const Params params = instance(config);
  json doc = params_to_json(params);
  doc["convention"] = convention_to_json(params);
  doc["oracle_feasible"] = oracle_feasible(params, config.verify_bound);
  return {render_record(doc, config.format)};
}

Result cmd_spectrum(const RunConfig& config) {
  const SpectrumTable table = spectrum(instance(config));
  switch (config.format) {
    case Format::Json: return {spectrum_to_json(table, config.precision).dump(2) + "\n"};
    case Format::Csv: return {spectrum_to_csv(table, config.precision)};
    case Format::Text: return {spectrum_to_text(table, config.precision)};
  }
  return {};
}

Result cmd_verify(const RunConfig& config) {
  if (!config.p || !config.l) throw UsageError("--p and --l are required");
  VerifyOptions options;
  options.verify_bound = config.verify_bound;
  options.precision = config.precision;
  options.seed = config.seed;
  const VerifyReport report = verify_instance(*config.p, *config.l, options);
  const int status = report.ok() ? kOk : kCheckFailure;
  if (config.format == Format::Json) return {report.to_json().dump(2) + "\n", status};

  std::vector<std::vector<std::string>> rows{{"name", "status", "detail"}};
  for (const auto& c : report.checks) rows.push_back({c.name, std::string(to_string(c.status)), c.detail});
  std::string text = render_rows(rows, config.format);
  if (config.format == Format::Text) {
    text += "\n" + std::to_string(report.count(CheckStatus::Pass)) + " pass, " +
            std::to_string(report.count(CheckStatus::Fail)) + " fail, " +
            std::to_string(report.count(CheckStatus::Skipped)) + " skipped\n";
  }
  return {text, status};
}

Result cmd_gauss(const RunConfig& config) {
  const Params params = instance(config);
  const unsigned digits = config.precision;
  const std::uint64_t l = params.l, N = params.N;
  std::uint64_t g = 2;
  while (legendre_symbol(static_cast<std::int64_t>(g), l) != -1) ++g;
  const std::vector<std::uint64_t> exponents{1, g, l, l * g % N};

  std::optional<CountMatrix> counts;
  if (oracle_feasible(params, config.verify_bound)) {
    const FieldCtx ctx = build_field(params.p, params.f, config.seed);
    counts = count_matrix(ctx, N);
  }

  int status = kOk;
  json doc;
  doc["params"] = params_to_json(params);
  doc["convention"] = convention_to_json(params);
  std::vector<std::vector<std::string>> rows{{"j", "value_symbolic", "approx_re", "approx_im", "brute_re", "brute_im"}};
  json sums = json::array();
  const AlgNum q = AlgNum::rational(params.p, l, BigRational(params.q()));
  for (std::uint64_t j : exponents) {
    const AlgNum value = gauss_sum_index2(params, j);
    PrecisionScope scope(digits + 10);
    const MpComplex z = embed_complex(value, digits + 10);
    json entry{{"j", j},
               {"value", to_json(value)},
               {"symbolic", to_symbolic(value)},
               {"approx", approx_pair(z, digits)},
               {"modulus_squared_is_q", norm_squared(value) == q}};
    std::vector<std::string> row{std::to_string(j), to_symbolic(value), format_float(z.re, digits),
                                 format_float(z.im, digits), "", ""};
    if (counts) {
      const MpComplex brute = brute_gauss_sum(*counts, j, digits + 10);
      const MpFloat err = relative_distance(z, brute);
      const bool agree = err < MpFloat(1e-6);
      status = agree ? status : kCheckFailure;
      entry["brute"] = approx_pair(brute, digits);
      entry["relative_error"] = format_float(err, 3);
      entry["agree"] = agree;
      row[4] = format_float(brute.re, digits);
      row[5] = format_float(brute.im, digits);
    }
    sums.push_back(std::move(entry));
    rows.push_back(std::move(row));
  }
  doc["index2"] = std::move(sums);
  const AlgNum total = gauss_sum_total(params);
  doc["total"] = {{"value", to_json(total)}, {"symbolic", to_symbolic(total)}};
  if (params.p != 2) {
    const QuadGaussValue quad = quadratic_gauss(params.p, params.f);
    doc["quadratic"] = {{"sign", quad.sign}, {"i_power", quad.i_power}, {"f", quad.f}};
  }
  if (config.format == Format::Json) return {doc.dump(2) + "\n", status};
  return {render_rows(rows, config.format), status};
}

Result cmd_cyclo(const RunConfig& config) {
  constexpr std::uint64_t kBound = 1000000;
  std::vector<PrimePower> cases;
  if (config.p) {
    if (*config.p == 2) throw Error(Errc::Unsupported, "order-2 cyclotomic numbers need odd q");
    if (!is_prime(*config.p)) throw Error(Errc::InvalidInput, "--p must be prime");
    unsigned e = 1;
    for (std::uint64_t q = *config.p; q < kBound; q *= *config.p, ++e) cases.push_back({*config.p, e});
  } else {
    cases = odd_prime_power_sample(kBound, 50, config.seed);
  }

  int status = kOk;
  json list = json::array();
  std::vector<std::vector<std::string>> rows{{"p", "e", "q", "(0,0)", "(0,1)", "(1,0)", "(1,1)", "match"}};
  for (const auto& pp : cases) {
    const BigInt q = big_pow(pp.prime, pp.exponent);
    const CycloTable formula = cyclotomic_numbers_formula(q);
    const CycloTable counted = brute_cyclotomic_numbers(pp.prime, pp.exponent, config.seed);
    const bool match = formula == counted;
    status = match ? status : kCheckFailure;
    list.push_back({{"p", pp.prime},
                    {"e", pp.exponent},
                    {"q", to_decimal(q)},
                    {"formula", formula},
                    {"enumerated", counted},
                    {"match", match}});
    rows.push_back({std::to_string(pp.prime), std::to_string(pp.exponent), to_decimal(q),
                    std::to_string(counted[0][0]), std::to_string(counted[0][1]), std::to_string(counted[1][0]),
                    std::to_string(counted[1][1]), match ? "yes" : "no"});
  }
  if (config.format == Format::Json) return {json{{"cases", std::move(list)}}.dump(2) + "\n", status};
  return {render_rows(rows, config.format), status};
}

Result cmd_trace_table(const RunConfig& config) {
  const Params params = instance(config);
  const TraceTable table = trace_beta_table(params);
  std::optional<std::vector<std::uint64_t>> in_field;
  if (oracle_feasible(params, config.verify_bound)) {
    const FieldCtx ctx = build_field(params.p, params.f, config.seed);
    in_field = in_field_trace_row(ctx, attach_order(ctx, params.N));
  }
  int status = kOk;
  std::vector<std::uint64_t> row(params.N);
  for (std::uint64_t i = 0; i < params.N; ++i) row[i] = table.at(i);
  if (in_field && *in_field != row) status = kCheckFailure;

  if (config.format == Format::Json) {
    json doc;
    doc["params"] = params_to_json(params);
    doc["convention"] = convention_to_json(params);
    json entries;
    for (ClassLabel c : kAllClasses) entries[std::string(to_string(c))] = table.entry(c);
    doc["entries"] = std::move(entries);
    if (table.epsilon) doc["epsilon"] = *table.epsilon;
    doc["row"] = row;
    if (in_field) doc["in_field_match"] = *in_field == row;
    return {doc.dump(2) + "\n", status};
  }
  std::vector<std::vector<std::string>> rows{{"class", "trace"}};
  for (ClassLabel c : kAllClasses) rows.push_back({std::string(to_string(c)), std::to_string(table.entry(c))});
  if (table.epsilon) rows.push_back({"epsilon", std::to_string(*table.epsilon)});
  if (in_field) rows.push_back({"in_field_match", *in_field == row ? "yes" : "no"});
  return {render_rows(rows, config.format), status};
}

Result dispatch(const RunConfig& config) {
  switch (config.command) {
    case Command::Params: return cmd_params(config);
    case Command::Spectrum: return cmd_spectrum(config);
    case Command::Verify: return cmd_verify(config);
    case Command::Gauss: return cmd_gauss(config);
    case Command::Cyclo: return cmd_cyclo(config);
    case Command::TraceTable: return cmd_trace_table(config);
  }
  throw UsageError("unknown command");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.verify_bound < 2) throw UsageError("--verify_bound must be at least 2");
    if (config.precision == 0) throw UsageError("--precision must be positive");
    const Result result = dispatch(config);
    if (config.output) {
      std::ofstream file(*config.output, std::ios::binary);
      if (!file) throw UsageError("cannot open " + *config.output);
      file << result.text;
    } else {
      out << result.text;
    }
    return result.status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::InternalInconsistency ? kCheckFailure : kInvalidInstance;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Walsh spectra of Tr(x^((q-1)/l^2)) in the index-2 case"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::uint64_t p = 0, l = 0;
  std::string format = "json", bound = "16777216", output;
  auto* p_opt = app.add_option("--p", p, "characteristic (prime)");
  auto* l_opt = app.add_option("--l", l, "prime with l = 3 (mod 4), l != 3");
  app.add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--verify_bound", bound, "largest q handled by the brute-force oracle");
  app.add_option("--precision", config.precision, "decimal digits for numeric output");
  auto* out_opt = app.add_option("--output", output, "write the result to this file");
  app.add_option("--seed", config.seed, "seed for field construction and factoring");

  const std::pair<const char*, Command> commands[] = {
      {"params", Command::Params}, {"spectrum", Command::Spectrum}, {"verify", Command::Verify},
      {"gauss", Command::Gauss},   {"cyclo", Command::Cyclo},       {"trace-table", Command::TraceTable}};
  const char* help[] = {"derived parameters",      "exact Walsh spectrum",          "invariant suite and oracle",
                        "index-2 Gauss sums",      "order-2 cyclotomic numbers",    "traces of beta^i"};
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    const Command cmd = commands[i].second;
    app.add_subcommand(commands[i].first, help[i])->callback([&config, cmd] { config.command = cmd; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  if (p_opt->count() > 0) config.p = p;
  if (l_opt->count() > 0) config.l = l;
  if (out_opt->count() > 0) config.output = output;
  config.format = format == "csv" ? Format::Csv : format == "text" ? Format::Text : Format::Json;
  try {
    config.verify_bound = parse_decimal(bound);
  } catch (const std::exception&) {
    err << "usage error: --verify_bound must be a decimal integer\n";
    return kUsage;
  }
  return run(config, out, err);
}

}  // namespace walsh::cli
