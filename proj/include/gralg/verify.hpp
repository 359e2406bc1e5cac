#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gralg/finite_field.hpp"
#include "gralg/unitary.hpp"

namespace gralg {

enum class CheckStatus { Pass, Fail, Skipped, Info };
std::string_view to_string(CheckStatus s) noexcept;

/// One checked identity with what was observed and what was expected.
struct Check {
  std::string name;
  std::string observed;
  std::string expected;
  CheckStatus status = CheckStatus::Pass;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  /// No check failed (skipped and informational checks do not count).
  bool pass() const noexcept;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct SuiteConfig {
  int n = 3;
  Field field;
  EnumerationOptions options;
  std::uint64_t seed = 1;
  /// Random samples for sweeps that exceed the enumeration budget.
  std::uint64_t samples = 10000;
};

/// "lemma3", "lemma5", "lemma6", "theorem1", "example-c8xc2".
std::vector<std::string> suite_names();
/// Throws std::invalid_argument for an unknown suite.  Capacity overruns are
/// reported as skipped checks.
SuiteReport run_suite(std::string_view suite, const SuiteConfig& config);

/// A uniformly random normalized unit drawn from `rng`.
template <typename Rng>
AlgebraElement random_normalized_unit(const GroupAlgebra& algebra, Rng& rng) {
  std::vector<std::uint8_t> c(algebra.dimension());
  const auto mask = static_cast<std::uint8_t>(algebra.field().order() - 1);
  std::uint8_t acc = 0;
  for (std::size_t i = 1; i < c.size(); ++i) {
    c[i] = static_cast<std::uint8_t>(rng() & mask);
    acc ^= c[i];
  }
  c[0] = static_cast<std::uint8_t>(1 ^ acc);
  return algebra.from_words(std::move(c));
}

}  // namespace gralg
