#include "evconflict/fusion.hpp"

#include <sstream>
#include <unordered_map>

namespace evconflict {

double conflict_k(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1, m2);
  double k = 0.0;
  for (const auto& a : m1.focal()) {
    for (const auto& b : m2.focal()) {
      if ((a.set & b.set).empty()) k += a.mass * b.mass;
    }
  }
  return k;
}

CombinationResult combine_dempster(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1, m2);

  std::unordered_map<std::uint64_t, double> joint;
  double k = 0.0;
  for (const auto& a : m1.focal()) {
    for (const auto& b : m2.focal()) {
      const SubsetMask meet = a.set & b.set;
      const double product = a.mass * b.mass;
      if (meet.empty()) {
        k += product;
      } else {
        joint[meet.bits] += product;
      }
    }
  }

  const double agreement = 1.0 - k;
  if (agreement <= kTotalConflictMargin) {
    std::ostringstream os;
    os.precision(17);
    os << "total conflict: k = " << k << ", Dempster's rule requires k < 1";
    throw Error(ErrorCode::TotalConflict, os.str());
  }

  // Normalizing by the accumulated non-conflicting mass rather than 1 - k
  // keeps the result's sum at 1 even when k is close to 1.
  double retained = 0.0;
  for (const auto& entry : joint) retained += entry.second;

  std::vector<FocalElement> elements;
  elements.reserve(joint.size());
  for (const auto& [bits, mass] : joint) {
    elements.push_back({SubsetMask{bits}, mass / retained});
  }
  return {MassFunction::from_masks(m1.frame(), std::move(elements)), k};
}

}  // namespace evconflict
