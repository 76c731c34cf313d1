#include "evconflict/sweep.hpp"

#include <cstdio>

#include "evconflict/fusion.hpp"
#include "evconflict/measures.hpp"

namespace evconflict {

namespace {

SubsetMask members(std::initializer_list<int> ones_based) {
  SubsetMask mask;
  for (int x : ones_based) mask.bits |= std::uint64_t{1} << (x - 1);
  return mask;
}

SubsetMask prefix_mask(std::size_t prefix) {
  return {(std::uint64_t{1} << prefix) - 1};
}

std::string fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string exact(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace

Frame numbered_frame(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return make_frame(std::move(labels));
}

std::pair<MassFunction, MassFunction> sweep_pair(const Frame& frame, std::size_t prefix) {
  if (frame.size() < kMinSweepFrameSize) {
    throw Error(ErrorCode::UnknownLabel,
                "sweep needs a frame of at least " + std::to_string(kMinSweepFrameSize) +
                    " elements");
  }
  if (prefix < 1 || prefix > frame.size()) {
    throw Error(ErrorCode::UnknownLabel,
                "sweep prefix " + std::to_string(prefix) + " outside the frame");
  }
  auto m1 = MassFunction::from_masks(frame, {{members({2, 3, 4}), 0.05},
                                             {members({7}), 0.05},
                                             {frame.full(), 0.1},
                                             {prefix_mask(prefix), 0.8}});
  auto m2 = MassFunction::from_masks(frame, {{members({1, 2, 3, 4, 5}), 1.0}});
  return {std::move(m1), std::move(m2)};
}

std::string sweep_label(std::size_t prefix) {
  if (prefix >= 6) return "{1,2,...," + std::to_string(prefix) + "}";
  std::string out = "{";
  for (std::size_t i = 1; i <= prefix; ++i) {
    if (i > 1) out += ',';
    out += std::to_string(i);
  }
  return out + "}";
}

std::vector<SweepRow> run_sweep(std::size_t frame_size) {
  const Frame frame = numbered_frame(frame_size);
  std::vector<SweepRow> rows;
  rows.reserve(frame_size);
  for (std::size_t prefix = 1; prefix <= frame_size; ++prefix) {
    const auto [m1, m2] = sweep_pair(frame, prefix);
    rows.push_back({prefix, sweep_label(prefix), conflict_kr(m1, m2),
                    jousselme_distance(m1, m2), conflict_k(m1, m2)});
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "A,k_r,d_bba,k,k_r_4dp,d_bba_4dp,k_4dp\n";
  for (const auto& r : rows) {
    os << '"' << r.label << '"' << ',' << exact(r.k_r) << ',' << exact(r.d_bba) << ','
       << exact(r.k) << ',' << fixed(r.k_r, 4) << ',' << fixed(r.d_bba, 4) << ','
       << fixed(r.k, 4) << '\n';
  }
}

}  // namespace evconflict
