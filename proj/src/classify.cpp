#include "credfusion/classify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>

#include "credfusion/combination.hpp"

namespace credfusion {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n\"");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n\"");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char delimiter) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(delimiter, start);
    cells.push_back(trim(line.substr(start, pos == std::string_view::npos ? line.npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return cells;
}

std::optional<double> parse_number(std::string_view cell) {
  if (cell.empty()) return std::nullopt;
  if (cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

bool is_missing(std::string_view cell) { return cell.empty() || cell == "?" || cell == "NA" || cell == "nan"; }

}  // namespace

Dataset Dataset::subset(std::span<const std::size_t> rows) const {
  Dataset out{name, attribute_names, class_labels, Eigen::MatrixXd(static_cast<Eigen::Index>(rows.size()), features.cols()), {}};
  out.labels.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out.features.row(static_cast<Eigen::Index>(r)) = features.row(static_cast<Eigen::Index>(rows[r]));
    out.labels.push_back(labels[rows[r]]);
  }
  return out;
}

std::vector<std::size_t> Dataset::rows_of_class(std::size_t cls) const {
  std::vector<std::size_t> rows;
  for (std::size_t r = 0; r < labels.size(); ++r) {
    if (labels[r] == cls) rows.push_back(r);
  }
  return rows;
}

Dataset parse_dataset(std::istream& in, const TableSchema& schema, std::string name) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) break;
  }
  if (trim(line).empty()) throw EmptyDataset();

  const auto header = split(line, schema.delimiter);
  auto column_of = [&](const std::string& col) -> std::size_t {
    const auto it = std::find(header.begin(), header.end(), col);
    if (it == header.end()) throw SchemaError("column '" + col + "' not found in header");
    return static_cast<std::size_t>(it - header.begin());
  };
  if (schema.label_column.empty()) throw SchemaError("no label column given");
  const std::size_t label_col = column_of(schema.label_column);

  std::vector<std::size_t> feature_cols;
  std::vector<std::string> attribute_names;
  if (schema.feature_columns.empty()) {
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (c == label_col) continue;
      feature_cols.push_back(c);
      attribute_names.emplace_back(header[c]);
    }
  } else {
    for (const auto& f : schema.feature_columns) {
      const std::size_t c = column_of(f);
      if (c == label_col) throw SchemaError("label column '" + f + "' listed as a feature");
      feature_cols.push_back(c);
      attribute_names.push_back(f);
    }
  }
  if (feature_cols.empty()) throw SchemaError("no feature columns");

  Dataset ds;
  ds.name = std::move(name);
  ds.attribute_names = std::move(attribute_names);
  std::vector<double> values;
  std::map<std::string, std::size_t, std::less<>> class_index;

  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line, schema.delimiter);
    if (cells.size() != header.size()) {
      throw ParseError(line_no, std::min(cells.size(), header.size()) + 1,
                       "expected " + std::to_string(header.size()) + " cells, found " + std::to_string(cells.size()));
    }
    for (const std::size_t c : feature_cols) {
      if (is_missing(cells[c])) throw ParseError(line_no, c + 1, "missing value");
      const auto v = parse_number(cells[c]);
      if (!v) throw ParseError(line_no, c + 1, "not a number: '" + std::string(cells[c]) + "'");
      values.push_back(*v);
    }
    const auto label = cells[label_col];
    if (is_missing(label)) throw ParseError(line_no, label_col + 1, "missing label");
    auto it = class_index.find(label);
    if (it == class_index.end()) {
      it = class_index.emplace(std::string(label), ds.class_labels.size()).first;
      ds.class_labels.emplace_back(label);
    }
    ds.labels.push_back(it->second);
  }
  if (ds.labels.empty()) throw EmptyDataset();
  if (ds.class_labels.size() > kMaxFrameSize) throw SchemaError("too many classes for a frame of discernment");

  const auto rows = static_cast<Eigen::Index>(ds.labels.size());
  const auto cols = static_cast<Eigen::Index>(feature_cols.size());
  ds.features = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      values.data(), rows, cols);
  return ds;
}

Dataset load_dataset(const std::filesystem::path& path, const TableSchema& schema) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open dataset '" + path.string() + "'");
  return parse_dataset(in, schema, path.stem().string());
}

IntervalModel fit_interval_model(const Dataset& train, double lambda) {
  if (!(lambda > 0.0)) throw InvalidArgument("lambda must be positive");
  const auto classes = static_cast<Eigen::Index>(train.class_count());
  const auto attrs = static_cast<Eigen::Index>(train.attribute_count());
  IntervalModel model{train.frame(), Eigen::MatrixXd(classes, attrs), Eigen::MatrixXd(classes, attrs), lambda};
  for (Eigen::Index c = 0; c < classes; ++c) {
    const auto rows = train.rows_of_class(static_cast<std::size_t>(c));
    if (rows.empty()) throw MissingClass(train.class_labels[static_cast<std::size_t>(c)]);
    for (Eigen::Index a = 0; a < attrs; ++a) {
      double lo = train.features(static_cast<Eigen::Index>(rows.front()), a);
      double hi = lo;
      for (const std::size_t r : rows) {
        const double x = train.features(static_cast<Eigen::Index>(r), a);
        lo = std::min(lo, x);
        hi = std::max(hi, x);
      }
      model.lower(c, a) = lo;
      model.upper(c, a) = hi;
    }
  }
  return model;
}

double interval_distance(double a1, double a2, double b1, double b2) {
  const double dm = 0.5 * (a1 + a2) - 0.5 * (b1 + b2);
  const double dw = 0.5 * (a2 - a1) - 0.5 * (b2 - b1);
  return std::sqrt(dm * dm + dw * dw / 3.0);
}

MassFunction attribute_evidence(const IntervalModel& model, const Eigen::Ref<const Eigen::VectorXd>& sample,
                                std::size_t attribute) {
  if (attribute >= model.attribute_count()) throw InvalidArgument("attribute index out of range");
  const auto a = static_cast<Eigen::Index>(attribute);
  const double x = sample[a];
  const Eigen::Index classes = model.lower.rows();
  Eigen::VectorXd sim(classes);
  for (Eigen::Index c = 0; c < classes; ++c) {
    sim[c] = 1.0 / (1.0 + model.lambda * interval_distance(model.lower(c, a), model.upper(c, a), x, x));
  }
  sim /= sim.sum();
  std::vector<MassEntry> entries;
  for (Eigen::Index c = 0; c < classes; ++c) entries.emplace_back(Subset::singleton(static_cast<std::size_t>(c)), sim[c]);
  return MassFunction(model.frame, entries);
}

std::string method_name(FusionMethod method) {
  switch (method) {
    case FusionMethod::Dcr:
      return "dcr";
    case FusionMethod::Murphy:
      return "murphy";
    case FusionMethod::Icef:
      return "icef";
  }
  return "unknown";
}

FusionMethod parse_method(const std::string& name) {
  if (name == "dcr") return FusionMethod::Dcr;
  if (name == "murphy") return FusionMethod::Murphy;
  if (name == "icef" || name == "icef-pbagd") return FusionMethod::Icef;
  throw InvalidArgument("unknown classification method '" + name + "'");
}

Classification classify_sample(const IntervalModel& model, const Eigen::Ref<const Eigen::VectorXd>& sample,
                               FusionMethod method, const ClassifyConfig& config) {
  std::vector<MassFunction> evidence;
  if (config.attributes.empty()) {
    for (std::size_t a = 0; a < model.attribute_count(); ++a) evidence.push_back(attribute_evidence(model, sample, a));
  } else {
    for (const std::size_t a : config.attributes) evidence.push_back(attribute_evidence(model, sample, a));
  }
  try {
    FusionResult r = [&] {
      switch (method) {
        case FusionMethod::Dcr:
          return dcr_fuse(evidence);
        case FusionMethod::Murphy:
          return murphy_fuse(evidence);
        case FusionMethod::Icef:
          break;
      }
      return icef(evidence, config.icef).result;
    }();
    const std::size_t label = r.decision;
    return {label, std::move(r)};
  } catch (const TotalConflict&) {
    return {std::nullopt, std::nullopt};
  }
}

namespace {

struct Tally {
  Eigen::VectorXd correct;
  Eigen::VectorXd tested;
  std::size_t failures = 0;

  explicit Tally(std::size_t classes)
      : correct(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(classes))),
        tested(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(classes))) {}

  double total() const { return correct.sum() / tested.sum(); }
};

void tally_split(Tally& tally, const IntervalModel& model, const Dataset& test, FusionMethod method,
                 const ClassifyConfig& config) {
  for (std::size_t r = 0; r < test.size(); ++r) {
    const auto truth = static_cast<Eigen::Index>(test.labels[r]);
    const Eigen::VectorXd sample = test.features.row(static_cast<Eigen::Index>(r)).transpose();
    const auto c = classify_sample(model, sample, method, config);
    tally.tested[truth] += 1.0;
    if (!c.label) {
      ++tally.failures;
    } else if (static_cast<Eigen::Index>(*c.label) == truth) {
      tally.correct[truth] += 1.0;
    }
  }
}

EvaluationReport make_report(const Dataset& ds, FusionMethod method, const Tally& tally, double lambda,
                             const ClassifyConfig& config, double train_fraction) {
  EvaluationReport rep;
  rep.method = method_name(method);
  rep.class_labels = ds.class_labels;
  rep.class_accuracy = tally.correct.cwiseQuotient(tally.tested.cwiseMax(1.0));
  rep.total_accuracy = tally.total();
  rep.failures = tally.failures;
  rep.lambda = lambda;
  rep.tau = config.icef.tau;
  rep.train_fraction = train_fraction;
  return rep;
}

}  // namespace

EvaluationReport evaluate_split(const Dataset& train, const Dataset& test, FusionMethod method, double lambda,
                                const ClassifyConfig& config) {
  if (test.size() == 0) throw EmptyDataset();
  const IntervalModel model = fit_interval_model(train, lambda);
  Tally tally(test.class_count());
  tally_split(tally, model, test, method, config);
  const double fraction = static_cast<double>(train.size()) / static_cast<double>(train.size() + test.size());
  auto rep = make_report(test, method, tally, lambda, config, fraction);
  rep.per_trial = {rep.total_accuracy};
  return rep;
}

std::vector<MethodSeries> sweep_evaluate(const Dataset& ds, std::span<const FusionMethod> methods, double lambda,
                                         const ClassifyConfig& config, SweepOptions options) {
  if (ds.size() == 0) throw EmptyDataset();
  if (options.step_percent <= 0 || options.first_percent <= 0 || options.last_percent > 100 ||
      options.first_percent > options.last_percent) {
    throw InvalidArgument("invalid sweep range");
  }
  std::vector<MethodSeries> out;
  for (const auto m : methods) out.push_back({m, {}});

  for (int pct = options.first_percent; pct <= options.last_percent; pct += options.step_percent) {
    std::vector<std::size_t> train_rows;
    for (std::size_t c = 0; c < ds.class_count(); ++c) {
      const auto rows = ds.rows_of_class(c);
      const std::size_t take = (static_cast<std::size_t>(pct) * rows.size() + 99) / 100;
      train_rows.insert(train_rows.end(), rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(take));
    }
    const IntervalModel model = fit_interval_model(ds.subset(train_rows), lambda);
    for (auto& series : out) {
      Tally tally(ds.class_count());
      tally_split(tally, model, ds, series.method, config);
      auto rep = make_report(ds, series.method, tally, lambda, config, pct / 100.0);
      rep.per_trial = {rep.total_accuracy};
      series.reports.push_back(std::move(rep));
    }
  }
  return out;
}

EvaluationReport average_reports(std::span<const EvaluationReport> reports) {
  if (reports.empty()) throw InvalidArgument("no reports to average");
  EvaluationReport avg = reports.front();
  avg.class_accuracy.setZero();
  avg.total_accuracy = 0.0;
  avg.per_trial.clear();
  avg.failures = 0;
  avg.train_fraction = 0.0;
  for (const auto& r : reports) {
    avg.class_accuracy += r.class_accuracy;
    avg.total_accuracy += r.total_accuracy;
    avg.per_trial.push_back(r.total_accuracy);
    avg.failures += r.failures;
    avg.train_fraction += r.train_fraction;
  }
  const auto n = static_cast<double>(reports.size());
  avg.class_accuracy /= n;
  avg.total_accuracy /= n;
  avg.train_fraction /= n;
  return avg;
}

std::vector<EvaluationReport> monte_carlo_evaluate(const Dataset& ds, std::span<const FusionMethod> methods,
                                                   double lambda, const ClassifyConfig& config,
                                                   MonteCarloOptions options) {
  if (ds.size() == 0) throw EmptyDataset();
  if (options.trials == 0) throw InvalidArgument("at least one trial is required");
  if (options.train_percent <= 0 || options.train_percent >= 100) {
    throw InvalidArgument("train_percent must lie strictly between 0 and 100");
  }

  std::vector<Tally> tallies(methods.size(), Tally(ds.class_count()));
  std::vector<std::vector<double>> per_trial(methods.size());

  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);
    std::vector<std::size_t> train_rows;
    std::vector<std::size_t> test_rows;
    for (std::size_t c = 0; c < ds.class_count(); ++c) {
      auto rows = ds.rows_of_class(c);
      std::shuffle(rows.begin(), rows.end(), rng);
      const std::size_t take = (static_cast<std::size_t>(options.train_percent) * rows.size() + 50) / 100;
      if (take == 0 || take >= rows.size()) {
        throw InvalidArgument("class '" + ds.class_labels[c] + "' is too small for a train/test split");
      }
      train_rows.insert(train_rows.end(), rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(take));
      test_rows.insert(test_rows.end(), rows.begin() + static_cast<std::ptrdiff_t>(take), rows.end());
    }
    const IntervalModel model = fit_interval_model(ds.subset(train_rows), lambda);
    const Dataset test = ds.subset(test_rows);
    for (std::size_t m = 0; m < methods.size(); ++m) {
      Tally trial_tally(ds.class_count());
      tally_split(trial_tally, model, test, methods[m], config);
      per_trial[m].push_back(trial_tally.total());
      tallies[m].correct += trial_tally.correct;
      tallies[m].tested += trial_tally.tested;
      tallies[m].failures += trial_tally.failures;
    }
  }

  std::vector<EvaluationReport> out;
  for (std::size_t m = 0; m < methods.size(); ++m) {
    auto rep = make_report(ds, methods[m], tallies[m], lambda, config, options.train_percent / 100.0);
    rep.per_trial = std::move(per_trial[m]);
    out.push_back(std::move(rep));
  }
  return out;
}

void write_accuracy_table(std::ostream& os, std::span<const EvaluationReport> reports, char delimiter) {
  if (reports.empty()) return;
  const auto& classes = reports.front().class_labels;
  os << "class";
  for (const auto& r : reports) os << delimiter << r.method;
  os << '\n';
  const auto flags = os.flags();
  const auto precision = os.precision();
  os << std::fixed << std::setprecision(4);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    os << classes[c];
    for (const auto& r : reports) os << delimiter << r.class_accuracy[static_cast<Eigen::Index>(c)];
    os << '\n';
  }
  os << "Total";
  for (const auto& r : reports) os << delimiter << r.total_accuracy;
  os << '\n';
  os.flags(flags);
  os.precision(precision);
}

void write_sweep_table(std::ostream& os, std::span<const MethodSeries> series, char delimiter) {
  if (series.empty()) return;
  os << "train_percent";
  for (const auto& s : series) os << delimiter << method_name(s.method);
  os << '\n';
  const auto flags = os.flags();
  const auto precision = os.precision();
  for (std::size_t k = 0; k < series.front().reports.size(); ++k) {
    os << std::lround(series.front().reports[k].train_fraction * 100.0) << std::fixed << std::setprecision(4);
    for (const auto& s : series) os << delimiter << s.reports[k].total_accuracy;
    os << '\n';
    os.flags(flags);
    os.precision(precision);
  }
}

}  // namespace credfusion
