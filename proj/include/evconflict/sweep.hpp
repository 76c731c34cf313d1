#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "evconflict/core.hpp"

namespace evconflict {

inline constexpr std::size_t kSweepFrameSize = 20;
// m1 places mass on {7}, so smaller frames cannot host the sweep.
inline constexpr std::size_t kMinSweepFrameSize = 7;

/// Frame {1, 2, ..., n} with numeric labels.
Frame numbered_frame(std::size_t n);

/// The nested-prefix pair for A = {1..prefix}:
///   m1: {2,3,4} -> 0.05, {7} -> 0.05, frame -> 0.1, A -> 0.8
///   m2: {1,2,3,4,5} -> 1
std::pair<MassFunction, MassFunction> sweep_pair(const Frame& frame, std::size_t prefix);

/// "{1,2,3}" up to five members, "{1,2,...,n}" from six on.
std::string sweep_label(std::size_t prefix);

struct SweepRow {
  std::size_t prefix = 0;
  std::string label;
  double k_r = 0.0;
  double d_bba = 0.0;
  double k = 0.0;
};

/// One row per prefix 1..frame_size, in order.
std::vector<SweepRow> run_sweep(std::size_t frame_size = kSweepFrameSize);

/// Header plus one line per row: full-precision columns then 4-decimal ones.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace evconflict
