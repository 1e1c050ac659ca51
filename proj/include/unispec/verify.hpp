#ifndef UNISPEC_VERIFY_HPP
#define UNISPEC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace unispec {

struct VerifyOptions {
  int n_max = 0;            ///< 0: each check's desk-scale default
  int n = 0;                ///< nonzero: restrict size-indexed checks to this n
  std::vector<int> primes;  ///< empty: each check's default primes
  std::uint64_t trials = 0; ///< 0: sampler defaults (200000 / 500000)
  std::uint64_t seed = 20240917;
};

struct CheckResult {
  std::string reference;  ///< identity or oracle being checked
  std::string name;       ///< parameters, unique within the reference
  std::string lhs;
  std::string rhs;
  bool passed = false;
  bool finding = false;   ///< informational; does not affect the verdict
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  VerifyOptions options;
  std::vector<CheckResult> checks;  ///< sorted by reference, then generation order

  bool passed() const;
  std::size_t failures() const;
  /// {"schema": 1, "suite", "options", "passed", "summary", "checks": [...]}.
  nlohmann::ordered_json to_json() const;
};

/// suite: identities | oracle | samplers | all.
VerifyReport run_verification(std::string_view suite, const VerifyOptions& options);

}  // namespace unispec

#endif  // UNISPEC_VERIFY_HPP
