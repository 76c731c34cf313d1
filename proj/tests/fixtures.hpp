// The worked examples as in-memory BPAs.
#pragma once

#include <vector>

#include "evconflict/core.hpp"

namespace fixtures {

using evconflict::Frame;
using evconflict::MassAssignment;
using evconflict::MassFunction;

inline Frame labelled_frame(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("A" + std::to_string(i));
  return evconflict::make_frame(std::move(labels));
}

inline MassFunction bpa(const Frame& frame, std::vector<MassAssignment> items) {
  return evconflict::make_bpa(frame, items);
}

struct Pair {
  MassFunction m1;
  MassFunction m2;
};

inline Pair example1() {
  const auto f = labelled_frame(4);
  return {bpa(f, {{{"A1", "A2"}, 0.9}, {{"A3"}, 0.1}, {{"A4"}, 0.0}}),
          bpa(f, {{{"A1", "A2"}, 0.0}, {{"A3"}, 0.1}, {{"A4"}, 0.9}})};
}

inline Pair example1_revised() {
  const auto f = labelled_frame(4);
  return {bpa(f, {{{"A1", "A2"}, 1.0}}), bpa(f, {{{"A4"}, 1.0}})};
}

// Only A1..A4 appear, so the frame has four elements.
inline Pair example2_m1_m2() {
  const auto f = labelled_frame(4);
  return {bpa(f, {{{"A1"}, 0.5}, {{"A2"}, 0.5}}), bpa(f, {{{"A3"}, 0.5}, {{"A4"}, 0.5}})};
}

inline Pair example2_m3_m4() {
  const auto f = labelled_frame(6);
  const double third = 1.0 / 3.0;
  return {bpa(f, {{{"A1"}, third}, {{"A2"}, third}, {{"A3"}, third}}),
          bpa(f, {{{"A4"}, third}, {{"A5"}, third}, {{"A6"}, third}})};
}

inline Pair example3() {
  const auto f = labelled_frame(5);
  std::vector<MassAssignment> uniform;
  for (int i = 1; i <= 5; ++i) uniform.push_back({{"A" + std::to_string(i)}, 0.2});
  return {bpa(f, uniform), bpa(f, uniform)};
}

// Published 4-decimal reference values for the nested sweep (k_r, d_BBA),
// rows A = {1}, {1,2}, ..., {1..20}.
inline constexpr double kReferenceSweepKr[20] = {0.7348, 0.5483, 0.3690, 0.1964, 0.0094, 0.1639, 0.2808,
                                         0.3637, 0.4288, 0.4770, 0.5202, 0.5565, 0.5872, 0.6137,
                                         0.6367, 0.6569, 0.6748, 0.6907, 0.7050, 0.7178};
inline constexpr double kReferenceSweepDbba[20] = {0.7858, 0.6866, 0.5705, 0.4237, 0.1323, 0.3884, 0.5029,
                                           0.5705, 0.6187, 0.6554, 0.6844, 0.7082, 0.7281, 0.7451,
                                           0.7599, 0.7730, 0.7846, 0.7951, 0.8046, 0.8133};

}  // namespace fixtures
