#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "credfusion/errors.hpp"
#include "credfusion/fusion.hpp"

namespace credfusion {

class ParseError : public Error {
 public:
  ParseError(std::size_t row, std::size_t column, const std::string& what)
      : Error("row " + std::to_string(row) + ", column " + std::to_string(column) + ": " + what),
        row_(row),
        column_(column) {}
  /// 1-based line number in the file (the header is line 1).
  std::size_t row() const { return row_; }
  /// 1-based column number.
  std::size_t column() const { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

class EmptyDataset : public Error {
 public:
  EmptyDataset() : Error("dataset contains no records") {}
};

/// The schema does not match the table header.
class SchemaError : public Error {
 public:
  using Error::Error;
};

class MissingClass : public Error {
 public:
  explicit MissingClass(const std::string& label) : Error("no training records for class '" + label + "'") {}
};

/// Column roles for a delimiter-separated table with a header row.
struct TableSchema {
  std::string label_column;
  /// Empty means every column except the label.
  std::vector<std::string> feature_columns;
  char delimiter = ',';
};

struct Dataset {
  std::string name;
  std::vector<std::string> attribute_names;
  /// Distinct labels in order of first appearance.
  std::vector<std::string> class_labels;
  /// One row per record.
  Eigen::MatrixXd features;
  std::vector<std::size_t> labels;

  std::size_t size() const { return labels.size(); }
  std::size_t attribute_count() const { return attribute_names.size(); }
  std::size_t class_count() const { return class_labels.size(); }
  FrameOfDiscernment frame() const { return FrameOfDiscernment(class_labels); }

  /// Records at the given indices, in that order; class list and attributes are kept.
  Dataset subset(std::span<const std::size_t> rows) const;
  /// Record indices of one class in file order.
  std::vector<std::size_t> rows_of_class(std::size_t cls) const;
};

/// Parses a table. Missing or non-numeric feature cells raise ParseError with the location.
Dataset parse_dataset(std::istream& in, const TableSchema& schema, std::string name = "dataset");
Dataset load_dataset(const std::filesystem::path& path, const TableSchema& schema);

/// Per-(class, attribute) training ranges.
struct IntervalModel {
  FrameOfDiscernment frame;
  /// classes x attributes
  Eigen::MatrixXd lower;
  Eigen::MatrixXd upper;
  double lambda = 1.0;

  std::size_t attribute_count() const { return static_cast<std::size_t>(lower.cols()); }
};

/// Interval [min, max] of every attribute over each class's records. Throws MissingClass when a
/// class has no records and InvalidArgument unless lambda > 0.
IntervalModel fit_interval_model(const Dataset& train, double lambda);

/// Distance between intervals [a1, a2] and [b1, b2]:
/// sqrt((mid_a - mid_b)^2 + (halfwidth_a - halfwidth_b)^2 / 3).
double interval_distance(double a1, double a2, double b1, double b2);

/// Singleton-only BBA for one attribute: m({c}) proportional to 1 / (1 + lambda * dist(I_c, [x, x])).
MassFunction attribute_evidence(const IntervalModel& model, const Eigen::Ref<const Eigen::VectorXd>& sample,
                                std::size_t attribute);

enum class FusionMethod { Dcr, Murphy, Icef };

std::string method_name(FusionMethod method);
/// Accepts "dcr", "murphy", "icef" and "icef-pbagd".
FusionMethod parse_method(const std::string& name);

struct ClassifyConfig {
  IcefConfig icef;
  /// Attribute indices turned into evidence; empty means all.
  std::vector<std::size_t> attributes;
};

struct Classification {
  /// Empty when fusion failed (total conflict).
  std::optional<std::size_t> label;
  std::optional<FusionResult> result;
};

/// Builds one piece of evidence per selected attribute, fuses with the method and decides
/// by maximum Pignistic probability. Total conflict is reported as an empty label.
Classification classify_sample(const IntervalModel& model, const Eigen::Ref<const Eigen::VectorXd>& sample,
                               FusionMethod method, const ClassifyConfig& config = {});

struct EvaluationReport {
  std::string method;
  std::vector<std::string> class_labels;
  Eigen::VectorXd class_accuracy;
  double total_accuracy = 0.0;
  /// Total accuracy of every trial (Monte Carlo) or the single split.
  std::vector<double> per_trial;
  std::size_t failures = 0;
  double lambda = 0.0;
  double tau = 0.0;
  double train_fraction = 0.0;
};

/// Trains on `train`, tests on `test`.
EvaluationReport evaluate_split(const Dataset& train, const Dataset& test, FusionMethod method, double lambda,
                                const ClassifyConfig& config = {});

struct SweepOptions {
  int first_percent = 50;
  int last_percent = 100;
  int step_percent = 1;
};

struct MethodSeries {
  FusionMethod method;
  std::vector<EvaluationReport> reports;
};

/// For each training percentage, the first ceil(pct * n_c / 100) records of every class (file
/// order) form the training set and the whole dataset is the test set.
std::vector<MethodSeries> sweep_evaluate(const Dataset& ds, std::span<const FusionMethod> methods, double lambda,
                                         const ClassifyConfig& config = {}, SweepOptions options = {});

/// Mean per-class and total accuracy over a series of reports.
EvaluationReport average_reports(std::span<const EvaluationReport> reports);

struct MonteCarloOptions {
  std::size_t trials = 100;
  int train_percent = 70;
  std::uint64_t seed = 1;
};

/// Stratified random splits: round(train_percent * n_c / 100) records of each class train, the
/// rest test. Trial t draws from a generator seeded with (seed, t), so the report is a pure
/// function of its inputs. Per-class and total accuracy pool all trials.
std::vector<EvaluationReport> monte_carlo_evaluate(const Dataset& ds, std::span<const FusionMethod> methods,
                                                   double lambda, const ClassifyConfig& config = {},
                                                   MonteCarloOptions options = {});

/// Rows = classes + Total, columns = methods.
void write_accuracy_table(std::ostream& os, std::span<const EvaluationReport> reports, char delimiter = ',');

/// One row per report of a sweep: percent, total accuracy per method.
void write_sweep_table(std::ostream& os, std::span<const MethodSeries> series, char delimiter = ',');

}  // namespace credfusion
