#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "palsum/exact.hpp"
#include "palsum/enclosure.hpp"

namespace palsum::cli {

enum class Format { text, csv, json };

struct OutputConfig {
  Format format = Format::text;
  /// Unset means the per-command default (7 for bounds, 8 for table1).
  std::optional<int> decimal_digits;
  unsigned precision_bits = kDefaultPrecisionBits;
  std::uint64_t term_budget = kDefaultTermBudget;
  unsigned threads = 0;
};

/// Exit codes: 0 success, 1 a requested verification failed, 2 bad usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace palsum::cli
