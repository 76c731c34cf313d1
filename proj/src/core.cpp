#include "evconflict/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

namespace evconflict {

namespace {

std::string format_mass(double value) {
  std::ostringstream os;
  os.precision(12);
  os << value;
  return os.str();
}

}  // namespace

Frame::Frame(std::vector<std::string> labels) {
  if (labels.empty()) {
    throw Error(ErrorCode::EmptyFrame, "frame must contain at least one label");
  }
  if (labels.size() > kMaxFrameSize) {
    throw Error(ErrorCode::FrameTooLarge, "frame has " + std::to_string(labels.size()) +
                                              " labels, at most " +
                                              std::to_string(kMaxFrameSize) + " are supported");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) {
      throw Error(ErrorCode::EmptyFrame, "frame labels must be non-empty");
    }
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::DuplicateLabel, "duplicate frame label '" + label + "'");
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

std::optional<std::size_t> Frame::index_of(std::string_view label) const {
  const auto it = std::find(labels_->begin(), labels_->end(), label);
  if (it == labels_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_->begin());
}

bool operator==(const Frame& a, const Frame& b) {
  return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
}

Frame make_frame(std::vector<std::string> labels) { return Frame(std::move(labels)); }

SubsetMask parse_subset(const Frame& frame, std::span<const std::string> members) {
  SubsetMask mask;
  for (const auto& member : members) {
    const auto index = frame.index_of(member);
    if (!index) {
      throw Error(ErrorCode::UnknownLabel, "unknown label '" + member + "'");
    }
    mask.bits |= std::uint64_t{1} << *index;
  }
  return mask;
}

std::vector<std::string> render_subset(const Frame& frame, SubsetMask mask) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (mask.contains(i)) out.push_back(frame.label(i));
  }
  return out;
}

std::string format_subset(const Frame& frame, SubsetMask mask) {
  std::string out = "{";
  bool first = true;
  for (const auto& label : render_subset(frame, mask)) {
    if (!first) out += ',';
    out += label;
    first = false;
  }
  out += '}';
  return out;
}

MassFunction MassFunction::from_masks(Frame frame, std::vector<FocalElement> elements) {
  for (const auto& e : elements) {
    if (!frame.valid(e.set)) {
      throw Error(ErrorCode::UnknownLabel, "subset mask has bits outside the frame");
    }
    if (!std::isfinite(e.mass)) {
      throw Error(ErrorCode::NegativeMass, "mass must be a finite number");
    }
    if (e.mass < 0.0) {
      throw Error(ErrorCode::NegativeMass, "negative mass " + format_mass(e.mass) + " on " +
                                               format_subset(frame, e.set));
    }
    if (e.set.empty() && e.mass > 0.0) {
      throw Error(ErrorCode::EmptySetMass,
                  "nonzero mass " + format_mass(e.mass) + " on the empty set");
    }
  }

  std::sort(elements.begin(), elements.end(),
            [](const FocalElement& a, const FocalElement& b) { return a.set < b.set; });
  std::vector<FocalElement> focal;
  focal.reserve(elements.size());
  for (const auto& e : elements) {
    if (e.mass == 0.0) continue;
    if (!focal.empty() && focal.back().set == e.set) {
      focal.back().mass += e.mass;
    } else {
      focal.push_back(e);
    }
  }

  double total = 0.0;
  for (const auto& e : focal) total += e.mass;
  const double deviation = std::abs(total - 1.0);
  if (deviation > kMassRenormalizeTolerance) {
    throw Error(ErrorCode::UnnormalizedMass,
                "masses sum to " + format_mass(total) + ", expected 1");
  }
  if (deviation > kMassSumTolerance) {
    for (auto& e : focal) e.mass /= total;
  }
  return MassFunction(std::move(frame), std::move(focal));
}

double MassFunction::mass(SubsetMask set) const noexcept {
  const auto it = std::lower_bound(
      focal_.begin(), focal_.end(), set,
      [](const FocalElement& e, SubsetMask s) { return e.set < s; });
  return (it != focal_.end() && it->set == set) ? it->mass : 0.0;
}

SubsetMask MassFunction::core() const noexcept {
  SubsetMask out;
  for (const auto& e : focal_) out = out | e.set;
  return out;
}

MassFunction make_bpa(const Frame& frame, std::span<const MassAssignment> assignments) {
  std::vector<FocalElement> elements;
  elements.reserve(assignments.size());
  for (const auto& a : assignments) {
    elements.push_back({parse_subset(frame, a.members), a.mass});
  }
  return MassFunction::from_masks(frame, std::move(elements));
}

MassFunction vacuous_bpa(const Frame& frame) {
  return MassFunction::from_masks(frame, {{frame.full(), 1.0}});
}

void require_same_frame(const MassFunction& m1, const MassFunction& m2) {
  if (!(m1.frame() == m2.frame())) {
    throw Error(ErrorCode::FrameMismatch, "mass functions are defined on different frames");
  }
}

bool bpa_equal(const MassFunction& m1, const MassFunction& m2, double tol) {
  require_same_frame(m1, m2);
  const auto a = m1.focal();
  const auto b = m2.focal();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].set != b[i].set || std::abs(a[i].mass - b[i].mass) > tol) return false;
  }
  return true;
}

}  // namespace evconflict
