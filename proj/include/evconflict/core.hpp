#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evconflict/error.hpp"

namespace evconflict {

inline constexpr std::size_t kMaxFrameSize = 63;

// Absolute tolerance on the unit-sum condition of a mass function.
inline constexpr double kMassSumTolerance = 1e-9;
// Sums off by more than kMassSumTolerance but within this distance of 1 are
// rescaled instead of rejected, e.g. 0.3333333 x 3.
inline constexpr double kMassRenormalizeTolerance = 1e-6;

/// A subset of a frame; bit i is set iff the i-th label is a member.
struct SubsetMask {
  std::uint64_t bits = 0;

  constexpr bool empty() const noexcept { return bits == 0; }
  constexpr int cardinality() const noexcept { return std::popcount(bits); }
  constexpr bool contains(std::size_t index) const noexcept {
    return (bits >> index) & 1U;
  }

  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) noexcept {
    return {a.bits & b.bits};
  }
  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) noexcept {
    return {a.bits | b.bits};
  }
  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;
};

/// Ordered set of mutually exclusive hypotheses. Label order fixes bit
/// positions. Copies share the label storage.
class Frame {
 public:
  explicit Frame(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_->size(); }
  const std::vector<std::string>& labels() const noexcept { return *labels_; }
  const std::string& label(std::size_t index) const { return labels_->at(index); }
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// The whole frame as a mask (all N bits set).
  SubsetMask full() const noexcept {
    return {(std::uint64_t{1} << size()) - 1};
  }
  bool valid(SubsetMask mask) const noexcept { return (mask.bits & ~full().bits) == 0; }

  friend bool operator==(const Frame& a, const Frame& b);

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

Frame make_frame(std::vector<std::string> labels);

SubsetMask parse_subset(const Frame& frame, std::span<const std::string> members);
std::vector<std::string> render_subset(const Frame& frame, SubsetMask mask);
/// "{A1,A2}" style rendering in frame order.
std::string format_subset(const Frame& frame, SubsetMask mask);

struct SubsetRelation {
  SubsetMask intersection;
  SubsetMask union_;
  int card_intersection = 0;
  int card_union = 0;
};

constexpr SubsetRelation subset_algebra(SubsetMask a, SubsetMask b) noexcept {
  const SubsetMask inter = a & b;
  const SubsetMask uni = a | b;
  return {inter, uni, inter.cardinality(), uni.cardinality()};
}

struct FocalElement {
  SubsetMask set;
  double mass = 0.0;
};

/// One line of user input to make_bpa: a set named by labels and its mass.
struct MassAssignment {
  std::vector<std::string> members;
  double mass = 0.0;
};

/// A basic probability assignment. Focal elements are kept sorted by mask,
/// every stored mass is positive, the empty set never appears and the
/// masses sum to one.
class MassFunction {
 public:
  /// Validates and canonicalizes: zero masses dropped, duplicate sets
  /// merged by summing, near-unit sums rescaled.
  static MassFunction from_masks(Frame frame, std::vector<FocalElement> elements);

  const Frame& frame() const noexcept { return frame_; }
  std::span<const FocalElement> focal() const noexcept { return focal_; }
  std::size_t size() const noexcept { return focal_.size(); }
  /// Mass of `set`, zero for non-focal sets.
  double mass(SubsetMask set) const noexcept;
  /// Union of all focal elements.
  SubsetMask core() const noexcept;

 private:
  MassFunction(Frame frame, std::vector<FocalElement> focal)
      : frame_(std::move(frame)), focal_(std::move(focal)) {}

  Frame frame_;
  std::vector<FocalElement> focal_;
};

MassFunction make_bpa(const Frame& frame, std::span<const MassAssignment> assignments);

/// The vacuous BPA m(frame) = 1.
MassFunction vacuous_bpa(const Frame& frame);

bool bpa_equal(const MassFunction& m1, const MassFunction& m2, double tol);

/// Throws FrameMismatch unless both operands share a frame.
void require_same_frame(const MassFunction& m1, const MassFunction& m2);

}  // namespace evconflict
