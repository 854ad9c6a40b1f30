#include <doctest.h>

#include "helpers.hpp"
#include "walsh/verify.hpp"

using namespace walsh;

TEST_CASE("flagship verification passes") {
  const VerifyReport report = verify_instance(2, 7, VerifyOptions{});
  for (const auto& c : report.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.status != CheckStatus::Fail);
  }
  CHECK(report.ok());
  for (const char* name : {"brute_spectrum", "brute_zero", "brute_power_sum", "gauss_sums", "trace_table", "count_rows",
                           "b_sign_rule", "convention"}) {
    CAPTURE(name);
    REQUIRE(report.find(name));
    CHECK(report.find(name)->status == CheckStatus::Pass);
  }
  const auto doc = report.to_json();
  CHECK(doc["instance"]["field"]["modulus"].size() == 22);
  CHECK(doc["summary"]["fail"] == 0);
  CHECK(report.find("no-such-check") == nullptr);
}

TEST_CASE("symbolic-only verification") {
  for (const auto& [p, l] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{11, 7}, {3, 107}, {5, 19}}) {
    const VerifyReport report = verify_instance(p, l, VerifyOptions{});
    CAPTURE(p);
    CAPTURE(l);
    CHECK(report.ok());
    REQUIRE(report.find("oracle"));
    CHECK(report.find("oracle")->status == CheckStatus::Skipped);
    CHECK(report.find("parseval")->status == CheckStatus::Pass);
    CHECK(report.find("trace_table_subfield")->status == CheckStatus::Pass);
  }
  CHECK(verify_instance(11, 7, VerifyOptions{}).find("trace_table_extension")->status == CheckStatus::Pass);
  CHECK(verify_instance(5, 19, VerifyOptions{}).find("specialised_table")->status == CheckStatus::Pass);
}

TEST_CASE("lowering the bound skips the oracle") {
  VerifyOptions options;
  options.verify_bound = 1000;
  const VerifyReport report = verify_instance(2, 7, options);
  CHECK(report.ok());
  CHECK(report.find("oracle")->status == CheckStatus::Skipped);
  CHECK(report.find("brute_spectrum") == nullptr);
}

TEST_CASE("invalid instances throw") {
  CHECK_ERRC(verify_instance(7, 11, VerifyOptions{}), Errc::NotIndexTwo);
}
