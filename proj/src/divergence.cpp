#include "credfusion/divergence.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace credfusion {

SubsetDistribution pb_transform(const MassFunction& m, PbOptions options) {
  const Eigen::VectorXd bel = belief_vector(m);
  const Eigen::VectorXd pl = plausibility_vector(m);
  const Eigen::Index first = options.include_empty ? 0 : 1;
  const Eigen::Index len = bel.size() - first;
  Eigen::VectorXd w = bel.tail(len).array().exp() + pl.tail(len).array().exp();
  w /= w.sum();
  return {m.frame(), std::move(w), options.include_empty};
}

double pbagd(const MassFunction& m1, const MassFunction& m2, PbOptions options) {
  if (!m1.same_frame(m2)) throw FrameMismatch();
  return ag_divergence(pb_transform(m1, options).weights, pb_transform(m2, options).weights);
}

double bjs(const MassFunction& m1, const MassFunction& m2) {
  if (!m1.same_frame(m2)) throw FrameMismatch();
  std::vector<Subset> support;
  for (const auto& e : m1.focal_elements()) support.push_back(e.first);
  for (const auto& e : m2.focal_elements()) support.push_back(e.first);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());

  double sum = 0.0;
  for (const Subset s : support) {
    const double a = m1.mass(s);
    const double b = m2.mass(s);
    const double mid = a + b;
    if (a > 0.0) sum += 0.5 * a * std::log2(2.0 * a / mid);
    if (b > 0.0) sum += 0.5 * b * std::log2(2.0 * b / mid);
  }
  return std::max(sum, 0.0);
}

namespace {

struct Registry {
  std::mutex mutex;
  std::map<std::string, MeasureFactory> factories{
      {"pbagd", [] { return std::make_shared<const PbagdMeasure>(); }},
      {"bjs", [] { return std::make_shared<const BjsMeasure>(); }},
  };
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

void register_measure(const std::string& name, MeasureFactory factory) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  r.factories[name] = std::move(factory);
}

std::shared_ptr<const DivergenceMeasure> make_measure(const std::string& name) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  const auto it = r.factories.find(name);
  if (it == r.factories.end()) throw InvalidArgument("unknown divergence measure '" + name + "'");
  return it->second();
}

std::vector<std::string> registered_measures() {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  std::vector<std::string> names;
  for (const auto& [k, v] : r.factories) names.push_back(k);
  return names;
}

}  // namespace credfusion
