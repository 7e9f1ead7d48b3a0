#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "credfusion/divergence.hpp"
#include "credfusion/mass_function.hpp"

namespace credfusion {

/// Nonnegative weights over the evidence list, summing to 1.
using CredibilityVector = Eigen::VectorXd;
/// Probabilities over the events of a frame, summing to 1.
using EventProbabilities = Eigen::VectorXd;

/// N x N matrix of pairwise divergences among the evidence.
struct Edmm {
  Eigen::MatrixXd values;
  std::string measure;
};

/// n x N matrix: entry (j, i) is the divergence between evidence i and the categorical
/// evidence of event j. Smaller means evidence i supports event j more.
struct Eem {
  FrameOfDiscernment frame;
  Eigen::MatrixXd values;
  std::string measure;
};

/// n x N matrix of p(evidence i is most credible | event j is true); rows sum to 1.
struct ConditionalCredibility {
  Eigen::MatrixXd values;
};

/// Requires N >= 2, a shared frame and a symmetric measure. Only i < j is evaluated; the
/// lower triangle is mirrored and the diagonal is zero.
Edmm build_edmm(std::span<const MassFunction> evidence, const DivergenceMeasure& measure);

/// Requires N >= 1 and a shared frame.
Eem build_eem(std::span<const MassFunction> evidence, const DivergenceMeasure& measure);

/// Elementwise exp(-tau * d). Throws InvalidArgument unless tau > 0.
template <typename Derived>
Eigen::MatrixXd support_matrix(const Eigen::MatrixBase<Derived>& divergences, double tau) {
  if (!(tau > 0.0)) throw InvalidArgument("distance coefficient tau must be positive");
  return (-tau * divergences.derived().array()).exp().matrix();
}

/// Row-normalizes a strictly positive support matrix.
ConditionalCredibility conditional_credibility(const Eigen::MatrixXd& support);

/// How summed divergences map to credibility in the average-support rule.
enum class AverageSupportRule {
  /// Cred_i proportional to 1 / sum_h d_ih: evidence nearest the others weighs most.
  InverseDistance,
  /// Cred_i proportional to sum_h d_ih, the literal normalized-distance form.
  ProportionalDistance,
  /// Cred_i = (1 - s_i) / (N - 1) where s_i is the normalized summed distance.
  Similarity,
};

/// Average-support credibility. Degenerate cases never divide by zero: an all-zero EDMM
/// yields uniform weights, and under InverseDistance evidence with zero summed distance
/// shares all weight equally.
CredibilityVector average_support_credibility(const Edmm& edmm,
                                              AverageSupportRule rule = AverageSupportRule::InverseDistance);

/// Eigenvalues of the symmetric EDMM in ascending order.
Eigen::VectorXd edmm_eigenvalues(const Edmm& edmm);

/// Eigenvalue-based credibility: discount factors are the principal eigenvector entries
/// (absolute value) scaled so the largest is 1, then normalized to sum to 1. A matrix whose
/// largest eigenvalue is not positive yields uniform weights.
CredibilityVector eigenvalue_credibility(const Edmm& edmm);

/// Uniform 1/n over the events.
EventProbabilities initial_prob_uniform(std::size_t event_count);
inline EventProbabilities initial_prob_uniform(const FrameOfDiscernment& frame) {
  return initial_prob_uniform(frame.size());
}

enum class EemInitRule {
  /// p0(A_j) proportional to 1 / sum_l d_jl.
  InverseDistance,
  /// p0(A_j) proportional to sum_l d_jl.
  ProportionalDistance,
};

/// Initial event probabilities from the EEM row sums. Degenerate sums fall back to uniform
/// (or, for InverseDistance, to uniform over the zero-distance rows).
EventProbabilities initial_prob_from_eem(const Eem& eem, EemInitRule rule = EemInitRule::InverseDistance);

/// Delimiter-separated table with a header of column labels; the first column holds row labels.
void write_matrix(std::ostream& os, const Eigen::MatrixXd& values, std::span<const std::string> row_labels,
                  std::span<const std::string> column_labels, char delimiter = ',', int precision = 6);

}  // namespace credfusion
