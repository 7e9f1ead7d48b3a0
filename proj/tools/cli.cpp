#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "credfusion/cases.hpp"
#include "credfusion/classify.hpp"
#include "credfusion/combination.hpp"
#include "credfusion/curves.hpp"
#include "credfusion/evidence_document.hpp"
#include "credfusion/fusion.hpp"

namespace credfusion::cli {

namespace {

class NotConverged : public Error {
 public:
  using Error::Error;
};

class OutputFailure : public Error {
 public:
  using Error::Error;
};

struct FusionFlags {
  std::string method = "icef-pbagd";
  double tau = 200.0;
  double delta = 1e-6;
  std::size_t max_iter = 200;
  std::string init = "uniform";
  std::string measure = "pbagd";
  bool full_precision = false;
  CLI::Option* tau_opt = nullptr;
  CLI::Option* delta_opt = nullptr;
};

struct InputFlags {
  std::string file;
  std::string builtin;
};

struct Sink {
  std::ofstream file;
  std::ostream* os;

  Sink(const std::string& path, std::ostream& fallback) : os(&fallback) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw OutputFailure("cannot write '" + path + "'");
    os = &file;
  }

  void finish(const std::string& path) {
    if (path.empty()) return;
    file.close();
    if (!file) throw OutputFailure("error while writing '" + path + "'");
  }
};

void add_fusion_flags(CLI::App* cmd, FusionFlags& f) {
  f.tau_opt = cmd->add_option("--tau", f.tau, "Support sharpness (default 200 or the document's value)")
                  ->check(CLI::PositiveNumber);
  f.delta_opt = cmd->add_option("--delta", f.delta, "Convergence threshold on the L1 change of p")
                    ->check(CLI::PositiveNumber);
  cmd->add_option("--max-iter", f.max_iter, "Iteration cap")->check(CLI::PositiveNumber);
  cmd->add_option("--init", f.init, "Initial event probabilities")->check(CLI::IsMember({"uniform", "eem"}));
  cmd->add_option("--measure", f.measure, "Divergence measure")->check(CLI::IsMember({"pbagd", "bjs"}));
  cmd->add_flag("--full-precision", f.full_precision, "Print all significant digits");
}

void add_input_flags(CLI::App* cmd, InputFlags& in, const std::string& builtins) {
  cmd->add_option("input", in.file, "Evidence document (JSON)");
  cmd->add_option("--builtin", in.builtin, "Builtin evidence set: " + builtins);
}

std::map<std::string, std::vector<MassFunction>> builtin_sets() {
  auto pair = [](std::pair<MassFunction, MassFunction> p) { return std::vector<MassFunction>{p.first, p.second}; };
  return {
      {"example1", cases::sensor_fault_report()},
      {"table1", cases::sensor_fault_report()},
      {"table6", cases::compound_sensor_report()},
      {"example4", pair(cases::identical_singleton_pair())},
      {"example5", pair(cases::identical_compound_pair())},
      {"example6", pair(cases::close_pair())},
  };
}

EvidenceDocument load_input(const InputFlags& in) {
  if (in.file.empty() == in.builtin.empty()) throw InvalidArgument("give exactly one of an input file or --builtin");
  if (!in.file.empty()) return read_document(in.file);
  const auto sets = builtin_sets();
  const auto it = sets.find(in.builtin);
  if (it == sets.end()) throw InvalidArgument("unknown builtin '" + in.builtin + "'");
  return make_document(it->second);
}

IcefConfig icef_config(const FusionFlags& f, const EvidenceDocument& doc) {
  IcefConfig cfg;
  cfg.tau = f.tau_opt->count() > 0 ? f.tau : doc.tau.value_or(f.tau);
  cfg.delta = f.delta_opt->count() > 0 ? f.delta : doc.delta.value_or(f.delta);
  cfg.max_iter = f.max_iter;
  cfg.init = f.init == "eem" ? IcefInit::FromEem : IcefInit::Uniform;
  cfg.measure = make_measure(f.measure);
  return cfg;
}

void set_precision(std::ostream& os, bool full) {
  if (full) {
    os << std::defaultfloat << std::setprecision(17);
  } else {
    os << std::fixed << std::setprecision(4);
  }
}

void print_result(std::ostream& os, const FusionResult& r, const std::vector<std::string>& names,
                  const std::optional<CredibilityVector>& credibility, bool full) {
  const auto& frame = r.fused.frame();
  set_precision(os, full);
  os << "method," << r.method << "\n\nfocal,mass\n";
  for (const auto& [s, v] : r.fused.focal_elements()) {
    const std::string label = s == frame.full() ? "Omega" : frame.format_subset(s);
    os << '"' << label << "\"," << v << '\n';
  }
  os << "\nevent,pignistic\n";
  for (std::size_t j = 0; j < frame.size(); ++j) os << frame.label(j) << ',' << r.pignistic.probs[static_cast<Eigen::Index>(j)] << '\n';
  if (credibility) {
    os << "\nevidence,credibility\n";
    for (std::size_t i = 0; i < names.size(); ++i) os << names[i] << ',' << (*credibility)[static_cast<Eigen::Index>(i)] << '\n';
  }
  os << "\ndecision," << r.decision_label() << '\n';
}

void not_converged(const IcefTrace& trace) {
  throw NotConverged("ICEF did not converge within " + std::to_string(trace.steps_used) +
                     " iterations; inspect the run with `credfuse trace <input> --out trace.csv`");
}

int cmd_fuse(const InputFlags& in, const FusionFlags& f, const std::string& out_path, std::ostream& out) {
  const EvidenceDocument doc = load_input(in);
  const auto evidence = doc.masses();
  const auto names = doc.names();
  const auto n = static_cast<Eigen::Index>(evidence.size());

  std::optional<FusionResult> result;
  std::optional<CredibilityVector> credibility;
  if (f.method == "dcr") {
    result = dcr_fuse(evidence);
  } else if (f.method == "murphy") {
    result = murphy_fuse(evidence);
    credibility = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  } else if (f.method == "cef-avg" || f.method == "cef-eig") {
    if (evidence.size() < 2) {
      credibility = Eigen::VectorXd::Ones(1);
    } else {
      const Edmm edmm = build_edmm(evidence, *make_measure(f.measure));
      credibility = f.method == "cef-avg" ? average_support_credibility(edmm) : eigenvalue_credibility(edmm);
    }
    result = cef_fuse(evidence, *credibility, f.method + "-" + f.measure);
  } else {
    const auto outcome = icef(evidence, icef_config(f, doc));
    if (!outcome.trace.converged) not_converged(outcome.trace);
    credibility = outcome.trace.steps.back().credibility;
    result = outcome.result;
  }

  Sink sink(out_path, out);
  print_result(*sink.os, *result, names, credibility, f.full_precision);
  sink.finish(out_path);
  return kOk;
}

int cmd_trace(const InputFlags& in, const FusionFlags& f, const std::string& out_path, std::ostream& out) {
  const EvidenceDocument doc = load_input(in);
  const auto evidence = doc.masses();
  const auto outcome = icef(evidence, icef_config(f, doc));
  Sink sink(out_path, out);
  write_trace(*sink.os, outcome.trace, doc.names(), ',', f.full_precision ? 17 : 4);
  sink.finish(out_path);
  if (!outcome.trace.converged) not_converged(outcome.trace);
  return kOk;
}

int cmd_divergence(const InputFlags& in, const std::string& measure_name, const std::string& matrix,
                   const std::string& out_path, std::ostream& out) {
  if (in.builtin == "example2" || in.builtin == "example3") {
    if (!in.file.empty()) throw InvalidArgument("give exactly one of an input file or --builtin");
    const auto points =
        in.builtin == "example2" ? curve_nested_sets(default_alpha_grid()) : curve_shifting_focus();
    Sink sink(out_path, out);
    write_curve(*sink.os, points);
    sink.finish(out_path);
    return kOk;
  }

  const EvidenceDocument doc = load_input(in);
  const auto evidence = doc.masses();
  const auto names = doc.names();
  const auto measure = make_measure(measure_name);
  Sink sink(out_path, out);
  if (matrix != "eem") {
    if (evidence.size() < 2) throw InvalidArgument("an EDMM needs at least two pieces of evidence");
    *sink.os << "# EDMM (" << measure->name() << ")\n";
    write_matrix(*sink.os, build_edmm(evidence, *measure).values, names, names, ',', 4);
  }
  if (matrix != "edmm") {
    if (matrix == "both") *sink.os << '\n';
    *sink.os << "# EEM (" << measure->name() << ")\n";
    write_matrix(*sink.os, build_eem(evidence, *measure).values, doc.frame.labels(), names, ',', 4);
  }
  sink.finish(out_path);
  return kOk;
}

struct BenchFlags {
  std::string data;
  std::string label;
  std::vector<std::string> features;
  char delimiter = ',';
  std::string mode = "montecarlo";
  std::vector<std::string> methods{"dcr", "murphy", "icef"};
  double lambda = 5.0;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  int train_percent = 70;
  std::string out_dir;
  std::size_t row = 1;
};

Dataset load_bench_data(const BenchFlags& b) {
  return load_dataset(b.data, TableSchema{b.label, b.features, b.delimiter});
}

void write_report_file(const std::string& dir, const std::string& name, const std::function<void(std::ostream&)>& fn) {
  if (dir.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw OutputFailure("cannot create '" + dir + "': " + ec.message());
  const std::string path = (std::filesystem::path(dir) / name).string();
  std::ofstream os(path);
  if (!os) throw OutputFailure("cannot write '" + path + "'");
  fn(os);
  os.close();
  if (!os) throw OutputFailure("error while writing '" + path + "'");
}

int cmd_bench(const BenchFlags& b, const FusionFlags& f, std::ostream& out) {
  const Dataset ds = load_bench_data(b);
  std::vector<FusionMethod> methods;
  for (const auto& m : b.methods) methods.push_back(parse_method(m));
  ClassifyConfig cfg;
  cfg.icef = icef_config(f, EvidenceDocument{ds.frame(), {}, std::nullopt, std::nullopt});
  cfg.icef.keep_full_trace = false;

  std::vector<EvaluationReport> totals;
  if (b.mode == "sweep") {
    const auto series = sweep_evaluate(ds, methods, b.lambda, cfg);
    for (const auto& s : series) totals.push_back(average_reports(s.reports));
    write_report_file(b.out_dir, "sweep.csv", [&](std::ostream& os) { write_sweep_table(os, series); });
    write_report_file(b.out_dir, "sweep_average.csv", [&](std::ostream& os) { write_accuracy_table(os, totals); });
    out << "experiments," << series.front().reports.size() << '\n';
  } else {
    totals = monte_carlo_evaluate(ds, methods, b.lambda, cfg, MonteCarloOptions{b.trials, b.train_percent, b.seed});
    write_report_file(b.out_dir, "montecarlo.csv", [&](std::ostream& os) { write_accuracy_table(os, totals); });
    out << "trials," << b.trials << '\n';
  }
  if (b.out_dir.empty()) {
    write_accuracy_table(out, totals);
  } else {
    set_precision(out, f.full_precision);
    for (const auto& r : totals) out << "Total," << r.method << ',' << r.total_accuracy << '\n';
  }
  return kOk;
}

int cmd_evidence(const BenchFlags& b, const std::string& out_path, std::ostream& out) {
  const Dataset ds = load_bench_data(b);
  if (b.row == 0 || b.row > ds.size()) throw InvalidArgument("--row must lie in 1.." + std::to_string(ds.size()));
  const IntervalModel model = fit_interval_model(ds, b.lambda);
  const Eigen::VectorXd sample = ds.features.row(static_cast<Eigen::Index>(b.row - 1)).transpose();
  std::vector<MassFunction> evidence;
  for (std::size_t a = 0; a < ds.attribute_count(); ++a) evidence.push_back(attribute_evidence(model, sample, a));
  Sink sink(out_path, out);
  *sink.os << to_json(make_document(evidence, ds.attribute_names));
  sink.finish(out_path);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Credible evidence fusion for Dempster-Shafer evidence", "credfuse"};
  app.require_subcommand(1);

  InputFlags input;
  FusionFlags fusion;
  BenchFlags bench;
  std::string out_path;
  std::string matrix = "both";
  const std::string fuse_builtins = "table1, table6, example4, example5, example6";

  auto* fuse = app.add_subcommand("fuse", "Fuse an evidence set and print masses, Pignistic probabilities, decision");
  add_input_flags(fuse, input, fuse_builtins);
  add_fusion_flags(fuse, fusion);
  fuse->add_option("--method", fusion.method, "Fusion method")
      ->check(CLI::IsMember({"dcr", "murphy", "icef", "icef-pbagd", "cef-avg", "cef-eig"}));
  fuse->add_option("--out", out_path, "Write to this file instead of standard output");

  auto* trace = app.add_subcommand("trace", "Per-iteration ICEF table");
  add_input_flags(trace, input, fuse_builtins);
  add_fusion_flags(trace, fusion);
  trace->add_option("--out", out_path, "Write to this file instead of standard output");

  auto* divergence = app.add_subcommand("divergence", "Divergence matrices or builtin PBAGD curves");
  add_input_flags(divergence, input, fuse_builtins + ", example2, example3");
  divergence->add_option("--measure", fusion.measure, "Divergence measure")->check(CLI::IsMember({"pbagd", "bjs"}));
  divergence->add_option("--matrix", matrix, "Which matrix to print")->check(CLI::IsMember({"edmm", "eem", "both"}));
  divergence->add_option("--out", out_path, "Write to this file instead of standard output");

  auto add_dataset_flags = [&](CLI::App* cmd) {
    cmd->add_option("--data", bench.data, "Delimiter-separated table with a header row")->required();
    cmd->add_option("--label", bench.label, "Class label column")->required();
    cmd->add_option("--features", bench.features, "Feature columns (default: all but the label)")->delimiter(',');
    cmd->add_option("--delimiter", bench.delimiter, "Field delimiter");
    cmd->add_option("--lambda", bench.lambda, "Interval similarity scale")->check(CLI::PositiveNumber);
  };

  auto* bench_cmd = app.add_subcommand("bench", "Classification accuracy of fusion methods on a dataset");
  add_dataset_flags(bench_cmd);
  add_fusion_flags(bench_cmd, fusion);
  bench_cmd->add_option("--mode", bench.mode, "Evaluation protocol")->check(CLI::IsMember({"sweep", "montecarlo"}));
  bench_cmd->add_option("--methods", bench.methods, "Methods to compare")
      ->delimiter(',')
      ->check(CLI::IsMember({"dcr", "murphy", "icef", "icef-pbagd"}));
  bench_cmd->add_option("--seed", bench.seed, "Monte Carlo seed");
  bench_cmd->add_option("--trials", bench.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--train-percent", bench.train_percent, "Monte Carlo training share")
      ->check(CLI::Range(1, 99));
  bench_cmd->add_option("--out", bench.out_dir, "Directory for report tables");

  auto* evidence_cmd = app.add_subcommand("evidence", "Evidence document for one dataset record");
  add_dataset_flags(evidence_cmd);
  evidence_cmd->add_option("--row", bench.row, "1-based record number")->required();
  evidence_cmd->add_option("--out", out_path, "Write to this file instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (fuse->parsed()) return cmd_fuse(input, fusion, out_path, out);
    if (trace->parsed()) return cmd_trace(input, fusion, out_path, out);
    if (divergence->parsed()) return cmd_divergence(input, fusion.measure, matrix, out_path, out);
    if (bench_cmd->parsed()) return cmd_bench(bench, fusion, out);
    if (evidence_cmd->parsed()) return cmd_evidence(bench, out_path, out);
  } catch (const DocumentError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const EmptyDataset& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const TotalConflict& e) {
    err << "error: " << e.what() << '\n';
    return kTotalConflict;
  } catch (const NotConverged& e) {
    err << "error: " << e.what() << '\n';
    return kNotConverged;
  } catch (const OutputFailure& e) {
    err << "error: " << e.what() << '\n';
    return kOutputError;
  } catch (const SchemaError& e) {
    err << "error: " << e.what() << '\n';
    return kSchemaError;
  } catch (const MissingClass& e) {
    err << "error: " << e.what() << '\n';
    return kSchemaError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace credfusion::cli
