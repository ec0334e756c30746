#include "atm/checker.h"

#include "atm/analysis.h"
#include "atm/text.h"

namespace atm {

namespace {

const Sentence& premise(std::span<const Sentence> prior, std::size_t number,
                        const char* role) {
  if (number == 0 || number > prior.size()) {
    throw StepError(std::string(role) + " premise " + std::to_string(number) +
                    " does not precede this step");
  }
  return prior[number - 1];
}

}  // namespace

Sentence derive_step(const ProofStep& step, std::span<const Sentence> prior,
                     const ConstantTable& table) {
  try {
    if (const auto* lax = std::get_if<LogicalAxiomStep>(&step)) {
      return logical_axiom_instance(lax->axiom, lax->terms);
    }
    if (const auto* nlax = std::get_if<NonlogicalAxiomStep>(&step)) {
      return nonlogical_axiom_instance(nlax->scheme, nlax->bindings, table);
    }
  } catch (const SchemeError& e) {
    throw StepError(e.what());
  } catch (const MissingConstant& e) {
    throw StepError(e.what());
  }
  if (const auto* conj = std::get_if<ConjStep>(&step)) {
    return Sentence::Conj(premise(prior, conj->left, "left"),
                          premise(prior, conj->right, "right"));
  }
  if (const auto* mp = std::get_if<MpStep>(&step)) {
    const Sentence& minor = premise(prior, mp->minor, "minor");
    const Sentence& major = premise(prior, mp->major, "major");
    if (major.kind() != SentenceKind::kImpl) {
      throw StepError("major premise " + std::to_string(mp->major) +
                      " is not an implication: " + to_string(major));
    }
    if (!(major.left() == minor)) {
      throw StepError("premise mismatch: step " + std::to_string(mp->major) +
                      " needs antecedent " + to_string(major.left()) +
                      " but step " + std::to_string(mp->minor) + " proves " +
                      to_string(minor));
    }
    return major.right();
  }
  const auto& release = std::get<ReleaseStep>(step);
  const Sentence& asserted = premise(prior, release.premise, "release");
  if (asserted.kind() != SentenceKind::kA) {
    throw StepError("release needs a premise of the form A[t], step " +
                    std::to_string(release.premise) + " proves " +
                    to_string(asserted));
  }
  try {
    return eval(asserted.arg(), table);
  } catch (const MissingConstant& e) {
    throw StepError(e.what());
  }
}

CheckReport check(const ProofScript& script, const ConstantTable& table) {
  CheckReport report;
  report.name = script.name;
  if (script.steps.empty()) {
    report.error = "script has no steps";
    return report;
  }
  Analyzer analyzer(table);
  std::vector<Sentence> proved;
  proved.reserve(script.steps.size());
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    StepResult result;
    result.number = i + 1;
    try {
      Sentence s = derive_step(script.steps[i], proved, table);
      result.grounded = analyzer.grounded(s);
      if (!result.grounded) {
        report.diagnostics.push_back("step " + std::to_string(i + 1) +
                                     " derives ungrounded " + to_string(s));
      }
      result.sentence = s;
      proved.push_back(std::move(s));
      report.steps.push_back(std::move(result));
    } catch (const StepError& e) {
      result.error = e.what();
      report.failed_step = i + 1;
      report.error = "step " + std::to_string(i + 1) + ": " + e.what();
      report.steps.push_back(std::move(result));
      return report;
    }
  }
  report.conclusion = proved.back();
  report.conclusion_grounded = report.steps.back().grounded;
  if (!script.claim) {
    report.error = "script has no claim";
    return report;
  }
  if (!(*script.claim == proved.back())) {
    report.error = "conclusion mismatch: last step proves " +
                   to_string(proved.back()) + " but the claim is " +
                   to_string(*script.claim);
    return report;
  }
  if (!report.diagnostics.empty()) {
    report.error = "ungrounded theorem derived: " + report.diagnostics.front();
    return report;
  }
  report.ok = true;
  return report;
}

}  // namespace atm
