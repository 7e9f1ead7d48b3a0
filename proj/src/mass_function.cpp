#include "credfusion/mass_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "credfusion/errors.hpp"

namespace credfusion {

namespace {

std::vector<MassEntry> sorted_merged(std::span<const MassEntry> entries) {
  std::vector<MassEntry> out(entries.begin(), entries.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<MassEntry> merged;
  merged.reserve(out.size());
  for (const auto& [s, v] : out) {
    if (!merged.empty() && merged.back().first == s) {
      merged.back().second += v;
    } else {
      merged.emplace_back(s, v);
    }
  }
  return merged;
}

}  // namespace

std::string MassViolation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::NegativeMass:
      os << "negative mass " << value << " on subset 0x" << std::hex << subset.bits;
      break;
    case Kind::NotNormalized:
      os << "masses sum to " << value << " instead of 1";
      break;
    case Kind::EmptySetFocal:
      os << "empty set carries mass " << value;
      break;
    case Kind::OutsideFrame:
      os << "subset 0x" << std::hex << subset.bits << " is not contained in the frame";
      break;
  }
  return os.str();
}

std::optional<MassViolation> validate(const FrameOfDiscernment& frame, std::span<const MassEntry> entries) {
  const auto merged = sorted_merged(entries);
  double total = 0.0;
  for (const auto& [s, v] : merged) {
    if (!std::isfinite(v) || v < 0.0) return MassViolation{MassViolation::Kind::NegativeMass, v, s};
    if (s.empty() && v > 0.0) return MassViolation{MassViolation::Kind::EmptySetFocal, v, s};
    if (!frame.contains(s)) return MassViolation{MassViolation::Kind::OutsideFrame, v, s};
    total += v;
  }
  if (std::abs(total - 1.0) > kMassSumTolerance) {
    return MassViolation{MassViolation::Kind::NotNormalized, total, Subset{}};
  }
  return std::nullopt;
}

MassFunction::MassFunction(FrameOfDiscernment frame, std::span<const MassEntry> entries)
    : frame_(std::move(frame)) {
  if (auto violation = validate(frame_, entries)) throw InvalidMass(violation->describe());
  for (const auto& e : sorted_merged(entries)) {
    if (e.second > 0.0) focal_.push_back(e);
  }
}

MassFunction MassFunction::from_labels(const FrameOfDiscernment& frame,
                                       std::span<const std::pair<std::string, double>> entries) {
  std::vector<MassEntry> parsed;
  parsed.reserve(entries.size());
  for (const auto& [label, v] : entries) parsed.emplace_back(frame.parse_subset(label), v);
  return MassFunction(frame, parsed);
}

MassFunction MassFunction::vacuous(const FrameOfDiscernment& frame) { return categorical(frame, frame.full()); }

MassFunction MassFunction::categorical(const FrameOfDiscernment& frame, Subset focal) {
  const MassEntry e{focal, 1.0};
  return MassFunction(frame, std::span<const MassEntry>(&e, 1));
}

double MassFunction::mass(Subset s) const {
  const auto it = std::lower_bound(focal_.begin(), focal_.end(), s,
                                   [](const MassEntry& e, Subset key) { return e.first < key; });
  return (it != focal_.end() && it->first == s) ? it->second : 0.0;
}

Eigen::VectorXd MassFunction::dense() const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(std::size_t{1} << frame_.size()));
  for (const auto& [s, v] : focal_) out[s.bits] = v;
  return out;
}

namespace detail {

MassFunction adopt_masses(FrameOfDiscernment frame, std::vector<MassEntry> entries) {
  auto merged = sorted_merged(entries);
  std::erase_if(merged, [](const MassEntry& e) { return e.second <= 0.0; });
  return MassFunction(std::move(frame), std::move(merged), MassFunction::Unchecked{});
}

}  // namespace detail

double max_abs_difference(const MassFunction& a, const MassFunction& b) {
  double worst = 0.0;
  for (const auto& [s, v] : a.focal_elements()) worst = std::max(worst, std::abs(v - b.mass(s)));
  for (const auto& [s, v] : b.focal_elements()) worst = std::max(worst, std::abs(v - a.mass(s)));
  return worst;
}

double belief(const MassFunction& m, Subset a) {
  double sum = 0.0;
  for (const auto& [b, v] : m.focal_elements()) {
    if (b.is_subset_of(a)) sum += v;
  }
  return sum;
}

double plausibility(const MassFunction& m, Subset a) {
  double sum = 0.0;
  for (const auto& [b, v] : m.focal_elements()) {
    if (b.intersects(a)) sum += v;
  }
  return sum;
}

Eigen::VectorXd belief_vector(const MassFunction& m) {
  Eigen::VectorXd bel = m.dense();
  const std::size_t n = m.frame().size();
  const std::size_t count = std::size_t{1} << n;
  // Subset-sum (zeta) transform, one event at a time.
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t bit = std::size_t{1} << j;
    for (std::size_t s = 0; s < count; ++s) {
      if (s & bit) bel[static_cast<Eigen::Index>(s)] += bel[static_cast<Eigen::Index>(s ^ bit)];
    }
  }
  return bel;
}

Eigen::VectorXd plausibility_vector(const MassFunction& m) {
  const Eigen::VectorXd bel = belief_vector(m);
  const Eigen::Index count = bel.size();
  const Eigen::Index full = count - 1;
  Eigen::VectorXd pl(count);
  for (Eigen::Index s = 0; s < count; ++s) pl[s] = 1.0 - bel[full ^ s];
  // Pl(empty) is 0 by definition; avoid a rounding residue.
  pl[0] = 0.0;
  return pl;
}

std::size_t PignisticDistribution::argmax() const {
  Eigen::Index best = 0;
  for (Eigen::Index j = 1; j < probs.size(); ++j) {
    if (probs[j] > probs[best]) best = j;
  }
  return static_cast<std::size_t>(best);
}

PignisticDistribution pignistic(const MassFunction& m) {
  const std::size_t n = m.frame().size();
  Eigen::VectorXd p = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  for (const auto& [b, v] : m.focal_elements()) {
    const double share = v / b.cardinality();
    for (std::size_t j = 0; j < n; ++j) {
      if (b.contains(j)) p[static_cast<Eigen::Index>(j)] += share;
    }
  }
  return {m.frame(), std::move(p)};
}

MassFunction event_evidence(const FrameOfDiscernment& frame, std::size_t event) {
  if (event >= frame.size()) {
    throw InvalidArgument("event index " + std::to_string(event) + " out of range for a frame of " +
                          std::to_string(frame.size()) + " events");
  }
  return MassFunction::categorical(frame, Subset::singleton(event));
}

}  // namespace credfusion
