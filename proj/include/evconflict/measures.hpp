#pragma once

#include <optional>
#include <vector>

#include "evconflict/core.hpp"

namespace evconflict {

// Song's coefficient sums over every nonempty subset, so it is capped.
inline constexpr std::size_t kMaxSongFrameSize = 24;
// The dense Gram check factors a (2^N - 1)^2 matrix.
inline constexpr std::size_t kMaxGramFrameSize = 12;
inline constexpr double kGramPivotThreshold = 1e-12;
// Floating-point excursions outside [0, 1] up to this size are clamped;
// anything larger is reported as an InternalConsistency error.
inline constexpr double kUnitClampSlack = 1e-12;

struct PignisticDistribution {
  Frame frame;
  std::vector<double> p;
};

struct LiuConflict {
  double k = 0.0;
  double dif_betp = 0.0;
  double epsilon = 0.0;
  bool in_conflict = false;
};

struct ConflictReport {
  double k = 0.0;
  double d_bba = 0.0;
  double dif_betp = 0.0;
  std::optional<double> cor;  // absent when the frame exceeds kMaxSongFrameSize
  double r_bpa = 0.0;
  double k_r = 0.0;
  std::optional<LiuConflict> liu;  // present iff a threshold was supplied
};

/// |a ∩ b| / |a ∪ b|; zero when exactly one side is empty, BothEmpty otherwise.
double jaccard(SubsetMask a, SubsetMask b);

/// Jaccard-weighted degree of correlation, summed over focal pairs only.
double correlation_degree(const MassFunction& m1, const MassFunction& m2);

/// c(m1,m2) / sqrt(c(m1,m1) c(m2,m2)).
double correlation_coefficient(const MassFunction& m1, const MassFunction& m2);

/// 1 - correlation_coefficient.
double conflict_kr(const MassFunction& m1, const MassFunction& m2);

/// Jousselme distance over the union of the two focal supports.
double jousselme_distance(const MassFunction& m1, const MassFunction& m2);

PignisticDistribution pignistic(const MassFunction& m);

/// Max over subsets of |BetP1(A) - BetP2(A)|, i.e. the total-variation
/// distance between the pignistic distributions.
double dif_betp(const MassFunction& m1, const MassFunction& m2);

LiuConflict liu_cf(const MassFunction& m1, const MassFunction& m2, double epsilon);

/// Cosine of the Jaccard-smoothed mass vectors over all nonempty subsets.
/// Throws FrameTooLargeForMeasure above kMaxSongFrameSize.
double song_cor(const MassFunction& m1, const MassFunction& m2);

struct GramCheck {
  std::size_t dimension = 0;
  bool positive_definite = false;
  double min_pivot = 0.0;
};

/// Factors the Jaccard Gram matrix over the 2^n - 1 nonempty subsets of an
/// n-element frame. Pivots must exceed kGramPivotThreshold.
GramCheck gram_check(std::size_t n);
bool gram_positive_definite(const Frame& frame);

ConflictReport conflict_report(const MassFunction& m1, const MassFunction& m2,
                               std::optional<double> epsilon = std::nullopt);

}  // namespace evconflict
