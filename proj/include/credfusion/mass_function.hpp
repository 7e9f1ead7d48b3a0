#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "credfusion/frame.hpp"

namespace credfusion {

class MassFunction;

namespace detail {
/// Sorts, merges duplicates and drops zero masses without validating the total. For results
/// of operations that preserve normalization by construction.
MassFunction adopt_masses(FrameOfDiscernment frame, std::vector<std::pair<Subset, double>> entries);
}  // namespace detail

/// Tolerance on the sum of masses.
inline constexpr double kMassSumTolerance = 1e-9;

using MassEntry = std::pair<Subset, double>;

/// Why a candidate mass assignment is not a valid BBA.
struct MassViolation {
  enum class Kind { NegativeMass, NotNormalized, EmptySetFocal, OutsideFrame };
  Kind kind;
  /// The offending mass (NegativeMass, EmptySetFocal) or the total (NotNormalized).
  double value = 0.0;
  Subset subset;

  std::string describe() const;
};

/// Checks a raw (subset, mass) list against the BBA invariants and returns the first violation.
/// Repeated subsets are accumulated before the sum check.
std::optional<MassViolation> validate(const FrameOfDiscernment& frame, std::span<const MassEntry> entries);

/// A basic belief assignment. Always valid once constructed; zero masses are dropped and
/// focal elements are kept sorted by bitmask.
class MassFunction {
 public:
  /// Throws InvalidMass carrying the MassViolation description.
  MassFunction(FrameOfDiscernment frame, std::span<const MassEntry> entries);
  MassFunction(FrameOfDiscernment frame, std::initializer_list<MassEntry> entries)
      : MassFunction(std::move(frame), std::span<const MassEntry>(entries.begin(), entries.size())) {}

  /// Builds from labelled entries like {"A1,A2", 0.3}.
  static MassFunction from_labels(const FrameOfDiscernment& frame,
                                  std::span<const std::pair<std::string, double>> entries);
  static MassFunction from_labels(const FrameOfDiscernment& frame,
                                  std::initializer_list<std::pair<std::string, double>> entries) {
    return from_labels(frame, std::span<const std::pair<std::string, double>>(entries.begin(), entries.size()));
  }

  static MassFunction vacuous(const FrameOfDiscernment& frame);
  static MassFunction categorical(const FrameOfDiscernment& frame, Subset focal);

  const FrameOfDiscernment& frame() const { return frame_; }
  std::span<const MassEntry> focal_elements() const { return focal_; }
  std::size_t focal_count() const { return focal_.size(); }
  double mass(Subset s) const;

  /// Dense masses indexed by bitmask (entry 0 is the empty set), length 2^n.
  Eigen::VectorXd dense() const;

  bool same_frame(const MassFunction& other) const { return frame_ == other.frame_; }

 private:
  struct Unchecked {};
  MassFunction(FrameOfDiscernment frame, std::vector<MassEntry> sorted_focal, Unchecked)
      : frame_(std::move(frame)), focal_(std::move(sorted_focal)) {}

  friend MassFunction detail::adopt_masses(FrameOfDiscernment, std::vector<MassEntry>);

  FrameOfDiscernment frame_;
  std::vector<MassEntry> focal_;
};

/// Largest absolute difference over the union of focal elements.
double max_abs_difference(const MassFunction& a, const MassFunction& b);

/// Bel(A): total mass of focal elements contained in A.
double belief(const MassFunction& m, Subset a);

/// Pl(A): total mass of focal elements intersecting A.
double plausibility(const MassFunction& m, Subset a);

/// Bel over every subset, indexed by bitmask (length 2^n). Uses the subset-sum transform.
Eigen::VectorXd belief_vector(const MassFunction& m);

/// Pl over every subset, indexed by bitmask (length 2^n); Pl(A) = 1 - Bel(complement of A).
Eigen::VectorXd plausibility_vector(const MassFunction& m);

struct PignisticDistribution {
  FrameOfDiscernment frame;
  Eigen::VectorXd probs;

  /// Most probable event; ties go to the lowest index.
  std::size_t argmax() const;
};

/// BetP(e) = sum over focal B containing e of m(B) / |B|.
PignisticDistribution pignistic(const MassFunction& m);

/// Categorical BBA asserting that `event` (0-based) is the ground truth.
MassFunction event_evidence(const FrameOfDiscernment& frame, std::size_t event);

}  // namespace credfusion
