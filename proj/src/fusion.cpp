#include "credfusion/fusion.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "credfusion/combination.hpp"
#include "credfusion/errors.hpp"

namespace credfusion {

namespace {

FusionResult make_result(MassFunction fused, std::string method) {
  auto bet = pignistic(fused);
  const std::size_t decision = bet.argmax();
  return {std::move(fused), std::move(bet), decision, std::move(method)};
}

}  // namespace

std::size_t decide(const MassFunction& fused) { return pignistic(fused).argmax(); }

MassFunction weighted_average(std::span<const MassFunction> evidence, const CredibilityVector& weights) {
  if (evidence.empty()) throw InvalidArgument("weighted_average needs at least one piece of evidence");
  if (static_cast<std::size_t>(weights.size()) != evidence.size()) {
    throw LengthMismatch(evidence.size(), static_cast<std::size_t>(weights.size()));
  }
  if ((weights.array() < 0.0).any() || std::abs(weights.sum() - 1.0) > kMassSumTolerance) {
    throw InvalidArgument("credibility weights must be nonnegative and sum to 1");
  }
  std::vector<MassEntry> acc;
  for (std::size_t i = 0; i < evidence.size(); ++i) {
    if (!evidence[i].same_frame(evidence.front())) throw FrameMismatch();
    const double w = weights[static_cast<Eigen::Index>(i)];
    for (const auto& [s, v] : evidence[i].focal_elements()) acc.emplace_back(s, w * v);
  }
  return detail::adopt_masses(evidence.front().frame(), std::move(acc));
}

FusionResult cef_fuse(std::span<const MassFunction> evidence, const CredibilityVector& weights, std::string method) {
  const MassFunction avg = weighted_average(evidence, weights);
  return make_result(self_fuse(avg, evidence.size()), std::move(method));
}

FusionResult murphy_fuse(std::span<const MassFunction> evidence) {
  if (evidence.empty()) throw InvalidArgument("murphy_fuse needs at least one piece of evidence");
  const auto n = static_cast<Eigen::Index>(evidence.size());
  return cef_fuse(evidence, Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n)), "murphy");
}

FusionResult dcr_fuse(std::span<const MassFunction> evidence) { return make_result(dcr_n(evidence), "dcr"); }

void IcefConfig::validate() const {
  if (!(tau > 0.0)) throw InvalidArgument("tau must be positive");
  if (!(delta > 0.0)) throw InvalidArgument("delta must be positive");
  if (max_iter == 0) throw InvalidArgument("max_iter must be at least 1");
  if (!measure) throw InvalidArgument("no divergence measure configured");
}

IcefUpdate icef_update(std::span<const MassFunction> evidence, const ConditionalCredibility& conditional,
                       const EventProbabilities& p) {
  CredibilityVector cred = conditional.values.transpose() * p;
  // Renormalize rounding drift.
  cred /= cred.sum();
  MassFunction fused = self_fuse(weighted_average(evidence, cred), evidence.size());
  EventProbabilities updated = pignistic(fused).probs;
  return {std::move(cred), std::move(fused), std::move(updated)};
}

IcefOutcome icef(std::span<const MassFunction> evidence, const IcefConfig& config) {
  config.validate();
  if (evidence.empty()) throw InvalidArgument("icef needs at least one piece of evidence");

  Eem eem = build_eem(evidence, *config.measure);
  ConditionalCredibility conditional = conditional_credibility(support_matrix(eem.values, config.tau));
  IcefTrace trace{{}, false, 0, std::move(eem), std::move(conditional)};

  EventProbabilities p = config.init == IcefInit::Uniform ? initial_prob_uniform(trace.eem.frame)
                                                          : initial_prob_from_eem(trace.eem, config.eem_rule);

  for (std::size_t k = 1; k <= config.max_iter; ++k) {
    IcefUpdate u = icef_update(evidence, trace.conditional, p);
    const double delta = (u.updated - p).lpNorm<1>();
    trace.steps.push_back({k, p, std::move(u.credibility), std::move(u.fused), u.updated, delta});
    if (!config.keep_full_trace && trace.steps.size() > 2) trace.steps.erase(trace.steps.begin());
    trace.steps_used = k;
    p = std::move(u.updated);
    if (delta <= config.delta || evidence.size() == 1) {
      trace.converged = true;
      break;
    }
  }

  FusionResult result = make_result(trace.steps.back().fused, "icef-" + config.measure->name());
  return {std::move(result), std::move(trace)};
}

void write_trace(std::ostream& os, const IcefTrace& trace, std::span<const std::string> evidence_names,
                 char delimiter, int precision) {
  const auto& labels = trace.eem.frame.labels();
  if (!trace.steps.empty() &&
      evidence_names.size() != static_cast<std::size_t>(trace.steps.front().credibility.size())) {
    throw LengthMismatch(evidence_names.size(), static_cast<std::size_t>(trace.steps.front().credibility.size()));
  }
  os << "step";
  for (const auto& l : labels) os << delimiter << "p_" << l;
  for (const auto& name : evidence_names) os << delimiter << "cred_" << name;
  os << delimiter << "delta\n";

  const auto flags = os.flags();
  const auto old_precision = os.precision();
  os << std::fixed << std::setprecision(precision);
  for (const auto& s : trace.steps) {
    os << s.step;
    for (Eigen::Index j = 0; j < s.probabilities.size(); ++j) os << delimiter << s.probabilities[j];
    for (Eigen::Index i = 0; i < s.credibility.size(); ++i) os << delimiter << s.credibility[i];
    os << delimiter << std::scientific << s.delta << std::fixed << '\n';
  }
  os.flags(flags);
  os.precision(old_precision);
}

}  // namespace credfusion
