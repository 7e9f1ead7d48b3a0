#pragma once

#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "credfusion/credibility.hpp"
#include "credfusion/divergence.hpp"
#include "credfusion/mass_function.hpp"

namespace credfusion {

struct FusionResult {
  MassFunction fused;
  PignisticDistribution pignistic;
  /// Index of the event with maximal Pignistic probability (lowest index on ties).
  std::size_t decision = 0;
  std::string method;

  const std::string& decision_label() const { return fused.frame().label(decision); }
};

/// Maximum-Pignistic decision; ties go to the lowest event index.
std::size_t decide(const MassFunction& fused);

/// sum_i w_i m_i. Weights must be nonnegative and sum to 1 (within 1e-9).
MassFunction weighted_average(std::span<const MassFunction> evidence, const CredibilityVector& weights);

/// Credibility-weighted average combined with itself N times (N - 1 applications of Dempster's rule).
FusionResult cef_fuse(std::span<const MassFunction> evidence, const CredibilityVector& weights,
                      std::string method = "cef");

/// CEF with uniform weights.
FusionResult murphy_fuse(std::span<const MassFunction> evidence);

/// Plain Dempster combination of the whole list.
FusionResult dcr_fuse(std::span<const MassFunction> evidence);

enum class IcefInit { Uniform, FromEem };

struct IcefConfig {
  double tau = 200.0;
  double delta = 1e-6;
  std::size_t max_iter = 200;
  IcefInit init = IcefInit::Uniform;
  EemInitRule eem_rule = EemInitRule::InverseDistance;
  std::shared_ptr<const DivergenceMeasure> measure = std::make_shared<const PbagdMeasure>();
  /// When false only the last two steps are retained.
  bool keep_full_trace = true;

  /// Throws InvalidArgument on tau <= 0, delta <= 0, max_iter == 0 or a null measure.
  void validate() const;
};

struct IcefStep {
  /// 1-based iteration number.
  std::size_t step = 0;
  /// Event probabilities the credibilities were computed from.
  EventProbabilities probabilities;
  CredibilityVector credibility;
  MassFunction fused;
  /// Pignistic probabilities of `fused`, fed into the next step.
  EventProbabilities updated;
  /// L1 distance between `updated` and `probabilities`.
  double delta = 0.0;
};

struct IcefTrace {
  std::vector<IcefStep> steps;
  bool converged = false;
  std::size_t steps_used = 0;
  Eem eem;
  ConditionalCredibility conditional;
};

struct IcefOutcome {
  FusionResult result;
  IcefTrace trace;
};

/// One credibility / fusion / probability update from event probabilities `p`.
struct IcefUpdate {
  CredibilityVector credibility;
  MassFunction fused;
  EventProbabilities updated;
};
IcefUpdate icef_update(std::span<const MassFunction> evidence, const ConditionalCredibility& conditional,
                       const EventProbabilities& p);

/// Iterative credible evidence fusion.
///
/// The EEM, conditional credibilities and initial probabilities are computed once. Each step
/// sets Cred = C^T p, fuses the credibility-weighted average with itself N times, and feeds the
/// Pignistic probabilities back as the next p. Iteration stops when the L1 change of p is at
/// most `delta`; hitting `max_iter` returns a trace with converged = false rather than throwing.
///
/// A single piece of evidence always gets credibility 1, so that run stops after one step
/// and is reported as converged.
IcefOutcome icef(std::span<const MassFunction> evidence, const IcefConfig& config = {});

/// Delimiter-separated trace: step, p(event)..., cred(evidence)..., delta.
void write_trace(std::ostream& os, const IcefTrace& trace, std::span<const std::string> evidence_names,
                 char delimiter = ',', int precision = 6);

}  // namespace credfusion
