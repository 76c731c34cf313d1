#include "evconflict/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "evconflict/fusion.hpp"

namespace evconflict {

namespace {

double clamp_unit(double value, const char* what) {
  if (value >= 0.0 && value <= 1.0) return value;
  if (value < 0.0 && value >= -kUnitClampSlack) return 0.0;
  if (value > 1.0 && value <= 1.0 + kUnitClampSlack) return 1.0;
  std::ostringstream os;
  os.precision(17);
  os << what << " evaluated to " << value << ", outside [0, 1]";
  throw Error(ErrorCode::InternalConsistency, os.str());
}

// Both operands nonempty here, so the union is never empty.
inline double jaccard_nonempty(SubsetMask a, SubsetMask b) noexcept {
  return static_cast<double>((a & b).cardinality()) / (a | b).cardinality();
}

}  // namespace

double jaccard(SubsetMask a, SubsetMask b) {
  if (a.empty() && b.empty()) {
    throw Error(ErrorCode::BothEmpty, "Jaccard index of two empty sets is undefined");
  }
  return jaccard_nonempty(a, b);
}

double correlation_degree(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1, m2);
  double total = 0.0;
  for (const auto& a : m1.focal()) {
    for (const auto& b : m2.focal()) {
      total += a.mass * b.mass * jaccard_nonempty(a.set, b.set);
    }
  }
  return total;
}

double correlation_coefficient(const MassFunction& m1, const MassFunction& m2) {
  const double cross = correlation_degree(m1, m2);
  const double self1 = correlation_degree(m1, m1);
  const double self2 = correlation_degree(m2, m2);
  return clamp_unit(cross / std::sqrt(self1 * self2), "correlation coefficient");
}

double conflict_kr(const MassFunction& m1, const MassFunction& m2) {
  return 1.0 - correlation_coefficient(m1, m2);
}

double jousselme_distance(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1, m2);

  // Difference vector over the merged (sorted) supports.
  std::vector<FocalElement> diff;
  diff.reserve(m1.size() + m2.size());
  const auto a = m1.focal();
  const auto b = m2.focal();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].set < b[j].set)) {
      diff.push_back({a[i].set, a[i].mass});
      ++i;
    } else if (i == a.size() || b[j].set < a[i].set) {
      diff.push_back({b[j].set, -b[j].mass});
      ++j;
    } else {
      diff.push_back({a[i].set, a[i].mass - b[j].mass});
      ++i;
      ++j;
    }
  }

  double quadratic = 0.0;
  for (const auto& x : diff) {
    for (const auto& y : diff) {
      quadratic += x.mass * y.mass * jaccard_nonempty(x.set, y.set);
    }
  }
  const double half = 0.5 * quadratic;
  if (half < 0.0 && half >= -kUnitClampSlack) return 0.0;
  return clamp_unit(std::sqrt(half), "Jousselme distance");
}

PignisticDistribution pignistic(const MassFunction& m) {
  const std::size_t n = m.frame().size();
  std::vector<double> p(n, 0.0);
  for (const auto& e : m.focal()) {
    const double share = e.mass / e.set.cardinality();
    for (std::uint64_t bits = e.set.bits; bits != 0; bits &= bits - 1) {
      p[static_cast<std::size_t>(std::countr_zero(bits))] += share;
    }
  }
  return {m.frame(), std::move(p)};
}

double dif_betp(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1, m2);
  const auto p1 = pignistic(m1);
  const auto p2 = pignistic(m2);
  // The maximizing subset collects exactly the singletons where BetP1 > BetP2.
  double positive = 0.0;
  double negative = 0.0;
  for (std::size_t i = 0; i < p1.p.size(); ++i) {
    const double d = p1.p[i] - p2.p[i];
    if (d > 0.0) positive += d;
    else negative -= d;
  }
  return clamp_unit(std::max(positive, negative), "pignistic distance");
}

LiuConflict liu_cf(const MassFunction& m1, const MassFunction& m2, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    std::ostringstream os;
    os << "conflict threshold " << epsilon << " must lie strictly between 0 and 1";
    throw Error(ErrorCode::BadThreshold, os.str());
  }
  LiuConflict out;
  out.k = conflict_k(m1, m2);
  out.dif_betp = dif_betp(m1, m2);
  out.epsilon = epsilon;
  out.in_conflict = out.k > epsilon && out.dif_betp > epsilon;
  return out;
}

double song_cor(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1, m2);
  const std::size_t n = m1.frame().size();
  if (n > kMaxSongFrameSize) {
    throw Error(ErrorCode::FrameTooLargeForMeasure,
                "Song's correlation coefficient sums over all 2^N - 1 subsets and is limited "
                "to N <= " + std::to_string(kMaxSongFrameSize) + " (frame has N = " +
                    std::to_string(n) + ")");
  }

  const auto a = m1.focal();
  const auto b = m2.focal();
  double cross = 0.0, self1 = 0.0, self2 = 0.0;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t bits = 1; bits < end; ++bits) {
    const SubsetMask target{bits};
    double v1 = 0.0;
    for (const auto& e : a) v1 += e.mass * jaccard_nonempty(e.set, target);
    double v2 = 0.0;
    for (const auto& e : b) v2 += e.mass * jaccard_nonempty(e.set, target);
    cross += v1 * v2;
    self1 += v1 * v1;
    self2 += v2 * v2;
  }
  return clamp_unit(cross / std::sqrt(self1 * self2), "Song's correlation coefficient");
}

GramCheck gram_check(std::size_t n) {
  if (n < 1 || n > kMaxGramFrameSize) {
    throw Error(ErrorCode::FrameTooLargeForCheck,
                "Gram check supports 1 <= N <= " + std::to_string(kMaxGramFrameSize) +
                    " (requested N = " + std::to_string(n) + ")");
  }
  const std::size_t dim = (std::size_t{1} << n) - 1;
  // Row i of the packed lower-triangular factor starts at i(i+1)/2; index i
  // stands for the subset with mask i + 1.
  std::vector<double> factor(dim * (dim + 1) / 2);
  auto row = [&](std::size_t i) { return factor.data() + i * (i + 1) / 2; };

  GramCheck out{dim, true, std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < dim; ++i) {
    double* li = row(i);
    const SubsetMask si{i + 1};
    for (std::size_t j = 0; j <= i; ++j) {
      const double* lj = row(j);
      double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
      std::size_t t = 0;
      for (; t + 4 <= j; t += 4) {
        s0 += li[t] * lj[t];
        s1 += li[t + 1] * lj[t + 1];
        s2 += li[t + 2] * lj[t + 2];
        s3 += li[t + 3] * lj[t + 3];
      }
      for (; t < j; ++t) s0 += li[t] * lj[t];
      const double s = jaccard_nonempty(si, SubsetMask{j + 1}) - ((s0 + s1) + (s2 + s3));
      if (j < i) {
        li[j] = s / lj[j];
        continue;
      }
      out.min_pivot = std::min(out.min_pivot, s);
      if (!(s > kGramPivotThreshold)) {
        out.positive_definite = false;
        return out;
      }
      li[i] = std::sqrt(s);
    }
  }
  return out;
}

bool gram_positive_definite(const Frame& frame) {
  return gram_check(frame.size()).positive_definite;
}

ConflictReport conflict_report(const MassFunction& m1, const MassFunction& m2,
                               std::optional<double> epsilon) {
  require_same_frame(m1, m2);
  ConflictReport out;
  out.k = conflict_k(m1, m2);
  out.d_bba = jousselme_distance(m1, m2);
  out.dif_betp = dif_betp(m1, m2);
  if (m1.frame().size() <= kMaxSongFrameSize) out.cor = song_cor(m1, m2);
  out.r_bpa = correlation_coefficient(m1, m2);
  out.k_r = 1.0 - out.r_bpa;
  if (epsilon) out.liu = liu_cf(m1, m2, *epsilon);
  return out;
}

}  // namespace evconflict
