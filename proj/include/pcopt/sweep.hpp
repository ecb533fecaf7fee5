#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pcopt {

struct SweepResult {
  std::string suite;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<std::string> first_failure;

  bool ok() const { return failed == 0; }
};

std::vector<std::string_view> sweep_names();

// Runs a named cross-validation suite. max_n <= 0 selects the suite's
// default order bound; random suites draw from `seed`.
SweepResult run_sweep(std::string_view suite, int max_n = 0, std::uint64_t seed = 1);

} // namespace pcopt
