#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relroot/report.hpp"
#include "relroot/theoremlab.hpp"

namespace relroot {

/// Suite names accepted by run_suite.
const std::vector<std::string>& suite_names();

struct SuiteOptions {
  /// Overrides the rank bound of lemma1 (default 6), lemma2 (5) and eq1 (5).
  std::optional<int> max_rank;
  /// Restricts c2, g2 and cases to one exponent.
  std::optional<int> k;
  /// Restricts c2 and g2 to one binding of eps; the outer optional is unset
  /// when no choice was made.
  std::optional<EpsBinding> eps;
  std::uint64_t seed = 0;
  /// Records the wall time; otherwise wallTime is 0 so reports are reproducible.
  bool timing = false;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 0;
};

/// Parses "symbolic" or a rational such as "2" or "-3/2".
EpsBinding parse_eps(const std::string& text);

/// Runs a named suite ("all" covers every suite except eq1). Jobs that throw
/// become failed cases carrying the error message. Throws InvalidArgument for
/// an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace relroot
