#ifndef ATM_CHECKER_H_
#define ATM_CHECKER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "atm/script.h"
#include "atm/syntax.h"

namespace atm {

class StepError : public Error {
 public:
  using Error::Error;
};

// The sentence a step derives from the sentences of the steps before it
// (prior[k - 1] is step k). Throws StepError when the step is not a valid
// axiom instance or rule application.
Sentence derive_step(const ProofStep& step, std::span<const Sentence> prior,
                     const ConstantTable& table);

struct StepResult {
  std::size_t number = 0;
  std::optional<Sentence> sentence;
  bool grounded = false;
  std::string error;  // empty on success
};

struct CheckReport {
  std::string name;
  bool ok = false;
  std::optional<Sentence> conclusion;
  bool conclusion_grounded = false;
  // First failing step, or nothing when the steps all check (a claim
  // mismatch is then reported without a step).
  std::optional<std::size_t> failed_step;
  std::string error;
  std::vector<StepResult> steps;
  // Derived sentences that are not grounded. Every theorem is grounded, so
  // any entry here marks the script as failed.
  std::vector<std::string> diagnostics;
};

// Checks every step in order, stopping at the first invalid one. On success
// the last step's sentence must equal the script's claim.
CheckReport check(const ProofScript& script, const ConstantTable& table);

}  // namespace atm

#endif  // ATM_CHECKER_H_
