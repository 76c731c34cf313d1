#pragma once

#include "evconflict/core.hpp"

namespace evconflict {

// Combination is refused once 1 - k drops to this value.
inline constexpr double kTotalConflictMargin = 1e-12;

struct CombinationResult {
  MassFunction combined;
  double k = 0.0;
};

/// Classical conflict: total product mass landing on disjoint focal pairs.
double conflict_k(const MassFunction& m1, const MassFunction& m2);

/// Dempster's rule. Throws TotalConflict when 1 - k <= kTotalConflictMargin.
CombinationResult combine_dempster(const MassFunction& m1, const MassFunction& m2);

}  // namespace evconflict
