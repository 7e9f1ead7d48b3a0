#include "credfusion/credibility.hpp"

#include <Eigen/Eigenvalues>
#include <iomanip>
#include <ostream>

namespace credfusion {

namespace {

void require_shared_frame(std::span<const MassFunction> evidence) {
  for (const auto& m : evidence.subspan(1)) {
    if (!m.same_frame(evidence.front())) throw FrameMismatch();
  }
}

Eigen::VectorXd uniform(Eigen::Index n) { return Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n)); }

// Weights proportional to 1 / sums. Entries with a zero sum dominate in the limit and split
// the mass among themselves.
Eigen::VectorXd inverse_weights(const Eigen::VectorXd& sums) {
  const auto zeros = (sums.array() <= 0.0).count();
  if (zeros > 0) {
    Eigen::VectorXd w = (sums.array() <= 0.0).cast<double>().matrix();
    return w / static_cast<double>(zeros);
  }
  Eigen::VectorXd w = sums.cwiseInverse();
  return w / w.sum();
}

Eigen::VectorXd proportional_weights(const Eigen::VectorXd& sums) {
  const double total = sums.sum();
  if (!(total > 0.0)) return uniform(sums.size());
  return sums / total;
}

}  // namespace

Edmm build_edmm(std::span<const MassFunction> evidence, const DivergenceMeasure& measure) {
  if (evidence.size() < 2) throw InvalidArgument("an EDMM needs at least two pieces of evidence");
  if (!measure.symmetric()) throw InvalidArgument("measure '" + measure.name() + "' is not symmetric");
  require_shared_frame(evidence);
  const auto n = static_cast<Eigen::Index>(evidence.size());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      d(i, j) = measure.evaluate(evidence[static_cast<std::size_t>(i)], evidence[static_cast<std::size_t>(j)]);
      d(j, i) = d(i, j);
    }
  }
  return {std::move(d), measure.name()};
}

Eem build_eem(std::span<const MassFunction> evidence, const DivergenceMeasure& measure) {
  if (evidence.empty()) throw InvalidArgument("an EEM needs at least one piece of evidence");
  require_shared_frame(evidence);
  const auto& frame = evidence.front().frame();
  const auto rows = static_cast<Eigen::Index>(frame.size());
  const auto cols = static_cast<Eigen::Index>(evidence.size());
  Eigen::MatrixXd d(rows, cols);
  for (Eigen::Index j = 0; j < rows; ++j) {
    const MassFunction event = event_evidence(frame, static_cast<std::size_t>(j));
    for (Eigen::Index i = 0; i < cols; ++i) d(j, i) = measure.evaluate(evidence[static_cast<std::size_t>(i)], event);
  }
  return {frame, std::move(d), measure.name()};
}

ConditionalCredibility conditional_credibility(const Eigen::MatrixXd& support) {
  if ((support.array() <= 0.0).any()) throw InvalidArgument("support entries must be strictly positive");
  const Eigen::VectorXd row_sums = support.rowwise().sum();
  return {row_sums.cwiseInverse().asDiagonal() * support};
}

CredibilityVector average_support_credibility(const Edmm& edmm, AverageSupportRule rule) {
  const Eigen::Index n = edmm.values.rows();
  if (n < 2) throw InvalidArgument("average-support credibility needs at least two pieces of evidence");
  // The diagonal is zero, so full row sums equal the off-diagonal sums.
  const Eigen::VectorXd sums = edmm.values.rowwise().sum();
  if (!(sums.sum() > 0.0)) return uniform(n);
  switch (rule) {
    case AverageSupportRule::InverseDistance:
      return inverse_weights(sums);
    case AverageSupportRule::ProportionalDistance:
      return proportional_weights(sums);
    case AverageSupportRule::Similarity:
      return (Eigen::VectorXd::Ones(n) - proportional_weights(sums)) / static_cast<double>(n - 1);
  }
  return uniform(n);
}

Eigen::VectorXd edmm_eigenvalues(const Edmm& edmm) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(edmm.values, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

CredibilityVector eigenvalue_credibility(const Edmm& edmm) {
  const Eigen::Index n = edmm.values.rows();
  if (n < 2) throw InvalidArgument("eigenvalue credibility needs at least two pieces of evidence");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(edmm.values);
  if (!(solver.eigenvalues()(n - 1) > 0.0)) return uniform(n);
  const Eigen::VectorXd principal = solver.eigenvectors().col(n - 1).cwiseAbs();
  const Eigen::VectorXd discount = principal / principal.maxCoeff();
  return discount / discount.sum();
}

EventProbabilities initial_prob_uniform(std::size_t event_count) {
  if (event_count == 0) throw InvalidArgument("a frame has at least one event");
  return uniform(static_cast<Eigen::Index>(event_count));
}

EventProbabilities initial_prob_from_eem(const Eem& eem, EemInitRule rule) {
  const Eigen::VectorXd sums = eem.values.rowwise().sum();
  if (!(sums.sum() > 0.0)) return uniform(sums.size());
  return rule == EemInitRule::InverseDistance ? inverse_weights(sums) : proportional_weights(sums);
}

void write_matrix(std::ostream& os, const Eigen::MatrixXd& values, std::span<const std::string> row_labels,
                  std::span<const std::string> column_labels, char delimiter, int precision) {
  if (row_labels.size() != static_cast<std::size_t>(values.rows())) {
    throw LengthMismatch(row_labels.size(), static_cast<std::size_t>(values.rows()));
  }
  if (column_labels.size() != static_cast<std::size_t>(values.cols())) {
    throw LengthMismatch(column_labels.size(), static_cast<std::size_t>(values.cols()));
  }
  const auto flags = os.flags();
  const auto old_precision = os.precision();
  for (const auto& c : column_labels) os << delimiter << c;
  os << '\n' << std::fixed << std::setprecision(precision);
  for (Eigen::Index r = 0; r < values.rows(); ++r) {
    os << row_labels[static_cast<std::size_t>(r)];
    for (Eigen::Index c = 0; c < values.cols(); ++c) os << delimiter << values(r, c);
    os << '\n';
  }
  os.flags(flags);
  os.precision(old_precision);
}

}  // namespace credfusion
