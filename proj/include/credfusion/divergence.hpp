#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "credfusion/errors.hpp"
#include "credfusion/mass_function.hpp"

namespace credfusion {

/// Arithmetic-geometric divergence between two nonnegative vectors, log base 2.
///
/// Each term is ((p+q)/2) log((p+q) / (2 sqrt(pq))). Terms with p = q = 0 contribute 0; a term
/// with exactly one zero entry is +inf. The expression is symmetric in (p, q) term by term, so
/// swapping the arguments gives a bit-identical result.
template <typename DerivedP, typename DerivedQ>
typename DerivedP::Scalar ag_divergence(const Eigen::MatrixBase<DerivedP>& p, const Eigen::MatrixBase<DerivedQ>& q) {
  using Scalar = typename DerivedP::Scalar;
  if (p.size() != q.size()) {
    throw LengthMismatch(static_cast<std::size_t>(p.size()), static_cast<std::size_t>(q.size()));
  }
  Scalar sum(0);
  for (Eigen::Index k = 0; k < p.size(); ++k) {
    const Scalar mean = (p(k) + q(k)) / Scalar(2);
    if (mean == Scalar(0)) continue;
    using std::log2;
    using std::sqrt;
    sum += mean * log2(mean / sqrt(p(k) * q(k)));
  }
  return sum;
}

struct PbOptions {
  /// Count the empty set (Bel = Pl = 0) as an extra element of the distribution.
  bool include_empty = false;
};

/// Exponentially normalized belief/plausibility weights over subsets of the frame.
struct SubsetDistribution {
  FrameOfDiscernment frame;
  /// Indexed by bitmask - 1 (nonempty subsets, ascending), or by bitmask when includes_empty.
  Eigen::VectorXd weights;
  bool includes_empty = false;

  double weight(Subset s) const {
    return weights[static_cast<Eigen::Index>(includes_empty ? s.bits : s.bits - 1)];
  }
};

/// PB(A) = (e^Bel(A) + e^Pl(A)) / sum over subsets of the same.
SubsetDistribution pb_transform(const MassFunction& m, PbOptions options = {});

/// Arithmetic-geometric divergence of the two PB transforms. Throws FrameMismatch.
double pbagd(const MassFunction& m1, const MassFunction& m2, PbOptions options = {});

/// Jensen-Shannon divergence between the mass assignments (log base 2) over the union of
/// their focal elements. Throws FrameMismatch.
double bjs(const MassFunction& m1, const MassFunction& m2);

/// Pairwise evidence difference measure.
class DivergenceMeasure {
 public:
  virtual ~DivergenceMeasure() = default;
  virtual std::string name() const = 0;
  virtual bool symmetric() const { return true; }
  virtual double evaluate(const MassFunction& m1, const MassFunction& m2) const = 0;
};

class PbagdMeasure final : public DivergenceMeasure {
 public:
  explicit PbagdMeasure(PbOptions options = {}) : options_(options) {}
  std::string name() const override { return "pbagd"; }
  double evaluate(const MassFunction& m1, const MassFunction& m2) const override {
    return pbagd(m1, m2, options_);
  }

 private:
  PbOptions options_;
};

class BjsMeasure final : public DivergenceMeasure {
 public:
  std::string name() const override { return "bjs"; }
  double evaluate(const MassFunction& m1, const MassFunction& m2) const override { return bjs(m1, m2); }
};

using MeasureFactory = std::function<std::shared_ptr<const DivergenceMeasure>()>;

/// Adds or replaces a named measure. "pbagd" and "bjs" are registered by default.
void register_measure(const std::string& name, MeasureFactory factory);

/// Throws InvalidArgument for unknown names.
std::shared_ptr<const DivergenceMeasure> make_measure(const std::string& name);

std::vector<std::string> registered_measures();

}  // namespace credfusion
