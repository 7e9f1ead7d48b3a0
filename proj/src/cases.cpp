#include "credfusion/cases.hpp"

#include "credfusion/errors.hpp"

namespace credfusion::cases {

namespace {

Subset prefix_set(int t) { return Subset((std::uint32_t{1} << t) - 1); }

}  // namespace

std::vector<MassFunction> sensor_fault_report() {
  const auto f = FrameOfDiscernment::numbered(3);
  return {
      MassFunction::from_labels(f, {{"A1", 0.70}, {"A2", 0.10}, {"A1,A2,A3", 0.20}}),
      MassFunction::from_labels(f, {{"A1", 0.70}, {"A1,A2,A3", 0.30}}),
      MassFunction::from_labels(f, {{"A1", 0.65}, {"A2", 0.15}, {"A1,A2,A3", 0.20}}),
      MassFunction::from_labels(f, {{"A1", 0.75}, {"A3", 0.05}, {"A1,A2,A3", 0.20}}),
      MassFunction::from_labels(f, {{"A2", 0.20}, {"A3", 0.80}}),
  };
}

std::vector<MassFunction> compound_sensor_report() {
  const auto f = FrameOfDiscernment::numbered(3);
  return {
      MassFunction::from_labels(f, {{"A1", 0.40}, {"A2", 0.28}, {"A3", 0.30}, {"A1,A3", 0.02}}),
      MassFunction::from_labels(f, {{"A1", 0.01}, {"A2", 0.90}, {"A3", 0.08}, {"A1,A3", 0.01}}),
      MassFunction::from_labels(f, {{"A1", 0.63}, {"A2", 0.06}, {"A3", 0.01}, {"A1,A3", 0.30}}),
      MassFunction::from_labels(f, {{"A1", 0.60}, {"A2", 0.09}, {"A3", 0.01}, {"A1,A3", 0.30}}),
      MassFunction::from_labels(f, {{"A1", 0.60}, {"A2", 0.09}, {"A3", 0.01}, {"A1,A3", 0.30}}),
  };
}

std::pair<MassFunction, MassFunction> close_pair() {
  const auto f = FrameOfDiscernment::numbered(4);
  return {
      MassFunction::from_labels(f, {{"A1", 0.75}, {"A2", 0.10}, {"A3", 0.10}, {"A1,A2,A3,A4", 0.05}}),
      MassFunction::from_labels(f, {{"A1", 0.65}, {"A2", 0.10}, {"A3", 0.10}, {"A1,A2,A3,A4", 0.15}}),
  };
}

std::pair<MassFunction, MassFunction> identical_singleton_pair() {
  const auto f = FrameOfDiscernment::numbered(4);
  auto m = MassFunction::from_labels(f, {{"A1", 0.75}, {"A2", 0.10}, {"A3", 0.10}, {"A4", 0.05}});
  return {m, m};
}

std::pair<MassFunction, MassFunction> identical_compound_pair() {
  const auto f = FrameOfDiscernment::numbered(4);
  auto m = MassFunction::from_labels(f, {{"A1", 0.75}, {"A2", 0.10}, {"A3", 0.10}, {"A1,A2,A3,A4", 0.05}});
  return {m, m};
}

std::pair<MassFunction, MassFunction> nested_set_pair(double alpha, int t) {
  if (t < 1 || t > 10) throw InvalidArgument("nested_set_pair: t must lie in 1..10");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw InvalidArgument("nested_set_pair: alpha must lie in [0, 1]");
  const auto f = FrameOfDiscernment::numbered(10);
  const Subset a2 = Subset::singleton(1);
  const Subset at = prefix_set(t);
  const std::vector<MassEntry> first{{a2, alpha}, {at, 1.0 - alpha}};
  const std::vector<MassEntry> second{{a2, 0.95}, {at, 1.0 - 0.95}};
  return {MassFunction(f, first), MassFunction(f, second)};
}

std::pair<MassFunction, MassFunction> shifting_focus_pair(int t) {
  if (t < 1 || t > 10) throw InvalidArgument("shifting_focus_pair: t must lie in 1..10");
  const auto f = FrameOfDiscernment::numbered(11);
  const std::vector<MassEntry> first{
      {f.full(), 0.10},
      {Subset(0b1110), 0.05},
      {Subset::singleton(6), 0.05},
      {prefix_set(t), 0.80},
  };
  return {MassFunction(f, first), MassFunction::categorical(f, prefix_set(5))};
}

}  // namespace credfusion::cases
