#pragma once

// The twelve acceptance criteria, grouped into suites. Shared by the
// `acceptance` test binary and `enriques accept`.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace enriques::acceptance {

/// Constants taken from outside sources; see fixtures/.
struct Fixtures {
  std::size_t brauer_count_rho18 = 15;
  std::size_t brauer_count_rho17 = 31;
  /// c with |Enr(X)| = 1 for T = diag(2, 2c).
  std::vector<std::int64_t> singleton_c = {3, 5, 7};
};

/// Reads fixtures/corollary_b.json and fixtures/enr_singletons.json. Throws
/// Parse on malformed files.
Fixtures load_fixtures(const std::filesystem::path& dir);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

const std::vector<std::string>& suite_names();

/// Criteria of one suite in id order. Throws BadParams for an unknown suite.
std::vector<CriterionResult> run_suite(std::string_view suite, std::uint64_t seed, const Fixtures& fixtures = {});

/// "[PASS] 3 eps-vanishes-norm-2-mod-4 (0.01 s / 1 s): detail"
std::string format_line(const CriterionResult& r);

}  // namespace enriques::acceptance
