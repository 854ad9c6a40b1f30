#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "walsh/bigint.hpp"
#include "walsh/kernels.hpp"

namespace walsh {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus s) noexcept;

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
  std::string detail;
};

struct VerifyOptions {
  BigInt verify_bound = BigInt(1) << 24;
  unsigned precision = 30;
  std::uint64_t seed = 0;
  KernelKind kernel = KernelKind::Auto;
  unsigned threads = 0;
};

struct VerifyReport {
  nlohmann::json instance;
  std::vector<Check> checks;

  bool ok() const;
  std::size_t count(CheckStatus s) const;
  const Check* find(const std::string& name) const;
  nlohmann::json to_json() const;
};

// Runs every symbolic identity and, when q <= verify_bound, the brute-force
// oracle. Throws walsh::Error if (p, l) is not a valid instance.
VerifyReport verify_instance(std::uint64_t p, std::uint64_t l, const VerifyOptions& options);

}  // namespace walsh
