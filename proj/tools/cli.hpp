#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "walsh/bigint.hpp"

namespace walsh::cli {

enum class Command { Params, Spectrum, Verify, Gauss, Cyclo, TraceTable };
enum class Format { Json, Csv, Text };

enum ExitCode : int { kOk = 0, kCheckFailure = 1, kInvalidInstance = 2, kUsage = 64 };

struct RunConfig {
  Command command = Command::Params;
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> l;
  Format format = Format::Json;
  BigInt verify_bound = BigInt(1) << 24;
  unsigned precision = 30;
  std::optional<std::string> output;
  std::uint64_t seed = 0;
};

// Executes one command. Results go to config.output (or `out`), diagnostics
// to `err`; the return value is the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Flag parsing plus run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace walsh::cli
