#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nevlab::cli {

enum class Suite { All, Theorem1, Corollaries, Example, Boolean, Free, Remark2 };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

struct CheckOutcome {
  std::string name;
  bool passed = false;
  double max_error = 0.0;
  double tolerance = 0.0;
  double elapsed_ms = 0.0;
  std::string note;  // exception text when the check threw
};

struct SuiteOutcome {
  Suite suite = Suite::All;
  std::uint64_t seed = 0;
  std::vector<CheckOutcome> checks;

  [[nodiscard]] bool passed() const;
};

/// Runs every check registered for `suite`. Each check draws from its own
/// generator seeded by (seed, check name), so a check's result does not
/// depend on which other checks ran.
SuiteOutcome run_suite(Suite suite, std::uint64_t seed);

void print_table(std::ostream& out, const SuiteOutcome& outcome);

}  // namespace nevlab::cli
