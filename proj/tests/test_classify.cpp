#include <doctest.h>

#include <sstream>

#include "credfusion/classify.hpp"
#include "credfusion/errors.hpp"

using namespace credfusion;

namespace {

const char* kToy =
    "x,y,label\n"
    "1.0,10,a\n"
    "2.0,11,a\n"
    "3.0,12,a\n"
    "7.0,20,b\n"
    "8.0,22,b\n"
    "9.0,21,b\n"
    "4.0,30,c\n"
    "5.0,31,c\n"
    "6.0,35,c\n";

Dataset toy() {
  std::istringstream in(kToy);
  return parse_dataset(in, TableSchema{"label", {}, ','}, "toy");
}

Dataset iris() { return load_dataset(CREDFUSION_IRIS_CSV, TableSchema{"species", {}, ','}); }

}  // namespace

TEST_CASE("parse dataset") {
  const auto ds = toy();
  CHECK(ds.size() == 9);
  CHECK(ds.attribute_count() == 2);
  CHECK(ds.attribute_names == std::vector<std::string>{"x", "y"});
  CHECK(ds.class_labels == std::vector<std::string>{"a", "b", "c"});
  CHECK(ds.features(4, 1) == 22.0);
  CHECK(ds.labels[6] == 2);
  CHECK(ds.rows_of_class(1) == std::vector<std::size_t>{3, 4, 5});

  std::istringstream in(kToy);
  const auto only_y = parse_dataset(in, TableSchema{"label", {"y"}, ','});
  CHECK(only_y.attribute_count() == 1);
  CHECK(only_y.features(0, 0) == 10.0);

  const std::vector<std::size_t> pick{8, 0};
  const auto sub = ds.subset(pick);
  CHECK(sub.size() == 2);
  CHECK(sub.features(0, 0) == 6.0);
  CHECK(sub.labels == std::vector<std::size_t>{2, 0});
  CHECK(sub.class_count() == 3);
}

TEST_CASE("parse errors carry the location") {
  auto parse = [](const std::string& text, TableSchema schema = {"label", {}, ','}) {
    std::istringstream in(text);
    return parse_dataset(in, schema);
  };
  try {
    parse("x,y,label\n1,2,a\n3,oops,b\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.row() == 3);
    CHECK(e.column() == 2);
  }
  try {
    parse("x,y,label\n1,,a\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.row() == 2);
    CHECK(e.column() == 2);
  }
  CHECK_THROWS_AS(parse("x,y,label\n1,2\n"), ParseError);
  CHECK_THROWS_AS(parse(""), EmptyDataset);
  CHECK_THROWS_AS(parse("x,y,label\n\n"), EmptyDataset);
  CHECK_THROWS_AS(parse("x,y,label\n1,2,a\n", {"class", {}, ','}), SchemaError);
  CHECK_THROWS_AS(parse("x,y,label\n1,2,a\n", {"label", {"z"}, ','}), SchemaError);
  CHECK_THROWS_AS(parse("x;y;label\n1;2;a\n", {"label", {}, ','}), SchemaError);
  CHECK_NOTHROW(parse("x;y;label\n1;2;a\n", {"label", {}, ';'}));
}

TEST_CASE("interval model is the per-class range") {
  const auto ds = iris();
  REQUIRE(ds.size() == 150);
  const auto model = fit_interval_model(ds, 5.0);
  for (std::size_t c = 0; c < 3; ++c) {
    for (Eigen::Index a = 0; a < 4; ++a) {
      double lo = 1e300;
      double hi = -1e300;
      for (std::size_t r = 0; r < ds.size(); ++r) {
        if (ds.labels[r] != c) continue;
        lo = std::min(lo, ds.features(static_cast<Eigen::Index>(r), a));
        hi = std::max(hi, ds.features(static_cast<Eigen::Index>(r), a));
      }
      CHECK(model.lower(static_cast<Eigen::Index>(c), a) == lo);
      CHECK(model.upper(static_cast<Eigen::Index>(c), a) == hi);
    }
  }
  CHECK_THROWS_AS(fit_interval_model(ds, 0.0), InvalidArgument);
  const std::vector<std::size_t> no_c{0, 1, 3};
  CHECK_THROWS_AS(fit_interval_model(toy().subset(no_c), 1.0), MissingClass);
}

TEST_CASE("interval distance") {
  CHECK(interval_distance(1.0, 3.0, 2.0, 2.0) == doctest::Approx(std::sqrt(1.0 / 3.0)));
  CHECK(interval_distance(0.0, 0.0, 3.0, 3.0) == doctest::Approx(3.0));
  CHECK(interval_distance(1.0, 2.0, 1.0, 2.0) == 0.0);
  CHECK(interval_distance(0.0, 4.0, 5.0, 5.0) == doctest::Approx(std::sqrt(9.0 + 4.0 / 3.0)));
}

TEST_CASE("attribute evidence") {
  const auto ds = toy();
  const auto model = fit_interval_model(ds, 2.0);
  const Eigen::Vector2d sample(2.0, 21.0);
  const auto m = attribute_evidence(model, sample, 0);
  CHECK(m.focal_count() == 3);
  const double sa = 1.0 / (1.0 + 2.0 * interval_distance(1.0, 3.0, 2.0, 2.0));
  const double sb = 1.0 / (1.0 + 2.0 * interval_distance(7.0, 9.0, 2.0, 2.0));
  const double sc = 1.0 / (1.0 + 2.0 * interval_distance(4.0, 6.0, 2.0, 2.0));
  CHECK(m.mass(Subset(1)) == doctest::Approx(sa / (sa + sb + sc)).epsilon(1e-14));
  CHECK(m.mass(Subset(2)) == doctest::Approx(sb / (sa + sb + sc)).epsilon(1e-14));
  CHECK(pignistic(attribute_evidence(model, sample, 1)).argmax() == 1);
  CHECK_THROWS_AS(attribute_evidence(model, sample, 2), InvalidArgument);
}

TEST_CASE("evidence is invariant under joint rescaling of features and lambda") {
  auto ds = iris();
  const auto base = fit_interval_model(ds, 5.0);
  auto scaled = ds;
  scaled.features *= 10.0;
  const auto model = fit_interval_model(scaled, 0.5);
  for (Eigen::Index r = 0; r < 150; r += 7) {
    const Eigen::VectorXd x = ds.features.row(r).transpose();
    const Eigen::VectorXd y = scaled.features.row(r).transpose();
    for (std::size_t a = 0; a < 4; ++a) {
      CHECK(max_abs_difference(attribute_evidence(base, x, a), attribute_evidence(model, y, a)) <= 1e-12);
    }
  }
}

TEST_CASE("classify a sample") {
  const auto ds = toy();
  const auto model = fit_interval_model(ds, 1.0);
  for (const auto method : {FusionMethod::Dcr, FusionMethod::Murphy, FusionMethod::Icef}) {
    const auto c = classify_sample(model, Eigen::Vector2d(8.0, 21.0), method);
    REQUIRE(c.label.has_value());
    CHECK(*c.label == 1);
    CHECK(c.result->fused.frame().label(*c.label) == "b");
  }
  ClassifyConfig only_y;
  only_y.attributes = {1};
  CHECK(*classify_sample(model, Eigen::Vector2d(8.0, 31.0), FusionMethod::Dcr, only_y).label == 2);
  CHECK(parse_method("icef-pbagd") == FusionMethod::Icef);
  CHECK(method_name(parse_method("murphy")) == "murphy");
  CHECK_THROWS_AS(parse_method("bayes"), InvalidArgument);
}

TEST_CASE("evaluate split") {
  const auto ds = toy();
  const auto rep = evaluate_split(ds, ds, FusionMethod::Dcr, 1.0);
  CHECK(rep.total_accuracy == 1.0);
  CHECK(rep.class_accuracy.isApprox(Eigen::Vector3d::Ones()));
  CHECK(rep.per_trial.size() == 1);
  CHECK(rep.train_fraction == doctest::Approx(0.5));
}

TEST_CASE("sweep evaluation") {
  const auto ds = iris();
  const std::vector<FusionMethod> methods{FusionMethod::Dcr, FusionMethod::Icef};
  const auto series = sweep_evaluate(ds, methods, 5.0);
  REQUIRE(series.size() == 2);
  for (const auto& s : series) {
    CHECK(s.reports.size() == 51);
    CHECK(s.reports.front().train_fraction == doctest::Approx(0.5));
    CHECK(s.reports.back().train_fraction == doctest::Approx(1.0));
    for (const auto& r : s.reports) {
      CHECK(r.total_accuracy >= 0.0);
      CHECK(r.total_accuracy <= 1.0);
      CHECK(r.total_accuracy == doctest::Approx(r.class_accuracy.mean()).epsilon(1e-12));
    }
  }
  const auto avg = average_reports(series[0].reports);
  double mean = 0.0;
  for (const auto& r : series[0].reports) mean += r.total_accuracy / 51.0;
  CHECK(avg.total_accuracy == doctest::Approx(mean).epsilon(1e-12));
  CHECK(avg.per_trial.size() == 51);

  std::ostringstream os;
  write_sweep_table(os, series);
  std::string header;
  std::istringstream lines(os.str());
  std::getline(lines, header);
  CHECK(header == "train_percent,dcr,icef");
  std::string row;
  std::getline(lines, row);
  CHECK(row.rfind("50,", 0) == 0);

  CHECK_THROWS_AS(sweep_evaluate(ds, methods, 5.0, {}, {60, 50, 1}), InvalidArgument);
}

TEST_CASE("monte carlo evaluation is deterministic for a seed") {
  const auto ds = iris();
  const std::vector<FusionMethod> methods{FusionMethod::Dcr, FusionMethod::Murphy};
  const MonteCarloOptions opts{10, 70, 7};
  const auto a = monte_carlo_evaluate(ds, methods, 5.0, {}, opts);
  const auto b = monte_carlo_evaluate(ds, methods, 5.0, {}, opts);
  REQUIRE(a.size() == 2);
  for (std::size_t m = 0; m < 2; ++m) {
    CHECK(a[m].per_trial == b[m].per_trial);
    CHECK(a[m].class_accuracy == b[m].class_accuracy);
    CHECK(a[m].per_trial.size() == 10);
  }
  const auto other = monte_carlo_evaluate(ds, methods, 5.0, {}, {10, 70, 8});
  CHECK(other[0].per_trial != a[0].per_trial);

  double mean = 0.0;
  for (const double t : a[0].per_trial) mean += t / 10.0;
  CHECK(a[0].total_accuracy == doctest::Approx(mean).epsilon(1e-12));

  CHECK_THROWS_AS(monte_carlo_evaluate(ds, methods, 5.0, {}, {0, 70, 1}), InvalidArgument);
  CHECK_THROWS_AS(monte_carlo_evaluate(ds, methods, 5.0, {}, {1, 100, 1}), InvalidArgument);

  std::ostringstream os;
  write_accuracy_table(os, a);
  CHECK(os.str().rfind("class,dcr,murphy\nIris-setosa,", 0) == 0);
  CHECK(os.str().find("\nTotal,") != std::string::npos);
}
