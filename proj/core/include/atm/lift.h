#ifndef ATM_LIFT_H_
#define ATM_LIFT_H_

#include <span>
#include <string>

#include "atm/builder.h"
#include "atm/ipc.h"
#include "atm/script.h"
#include "atm/syntax.h"

namespace atm {

class LiftError : public Error {
 public:
  using Error::Error;
};

// (M[t1] & ... & M[tn]) -> A[dotted B], or A[dotted B] when there are no
// terms.
Sentence lifted_conclusion(const Prop& theorem, std::span<const Term> terms);

// Emits into `builder` a derivation of lifted_conclusion(claim, terms) from
// an IPC proof built from Hilbert axioms and modus ponens only, where
// variable i stands for terms[i]. Returns the step of the conclusion.
ScriptBuilder::Step lift_into(ScriptBuilder& builder, const IpcProof& proof,
                              std::span<const Term> terms);

ProofScript subjunctive_lift(const IpcProof& proof, std::span<const Term> terms,
                             const ConstantTable& table = ConstantTable::Default(),
                             std::string name = "");

}  // namespace atm

#endif  // ATM_LIFT_H_
