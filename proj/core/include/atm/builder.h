#ifndef ATM_BUILDER_H_
#define ATM_BUILDER_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "atm/ipc.h"
#include "atm/script.h"
#include "atm/syntax.h"

namespace atm {

// Maps the atoms of sentences (A[t], T[t], M[t]) to propositional variables
// so that sentence-level reasoning can be written as IPC derivations.
class AtomTable {
 public:
  Prop abstract(const Sentence& phi);
  Sentence concretize(const Prop& p) const;
  const std::vector<Sentence>& atoms() const { return atoms_; }

 private:
  std::vector<Sentence> atoms_;
  std::unordered_map<Sentence, std::uint32_t> index_;
};

// Emits a proof script step by step, computing and checking each step's
// sentence as it goes. A step whose sentence is already derived is not
// emitted again; the earlier step number is returned instead.
class ScriptBuilder {
 public:
  using Step = std::size_t;  // 1-based

  explicit ScriptBuilder(const ConstantTable& table) : table_(&table) {}

  // Throws StepError for an invalid step.
  Step add(ProofStep step);
  Step lax(HilbertAxiom axiom, std::vector<Term> terms);
  Step nlax(int scheme, SchemeBindings bindings);
  Step conj(Step left, Step right);
  Step mp(Step minor, Step major);
  Step release(Step premise);

  // The Hilbert axiom instance over grounded sentences, e.g. phi & psi -> phi
  // for A3 with {phi, psi}: M[dot phi_i] by scheme 1, the guard by
  // conjunction, the guarded logical axiom, modus ponens, release.
  Step grounded_axiom(HilbertAxiom axiom, const std::vector<Sentence>& args);

  // Emits the steps of an IPC proof in which variable i stands for atoms[i]
  // and premise k is the already derived step premises[k - 1]. Every axiom
  // argument must be grounded. Returns the step of the last line.
  Step realize(const IpcProof& proof, std::span<const Sentence> atoms,
               std::span<const Step> premises);

  void comment(std::string text);

  const Sentence& sentence(Step step) const { return sentences_.at(step - 1); }
  std::optional<Step> find(const Sentence& phi) const;
  std::size_t size() const { return steps_.size(); }
  const ConstantTable& table() const { return *table_; }

  // The steps `goal` depends on, renumbered so that `goal` is the last one,
  // with claim = sentence(goal).
  ProofScript finish(Step goal, std::string name,
                     std::string description = "") const;

 private:
  const ConstantTable* table_;
  std::vector<ProofStep> steps_;
  std::vector<Sentence> sentences_;
  std::unordered_map<Sentence, Step> by_sentence_;
  std::map<std::size_t, std::vector<std::string>> comments_;
};

// Natural-deduction style reasoning over grounded sentences, realized into a
// ScriptBuilder. Hypotheses must be discharged before conclude().
class GroundedReasoner {
 public:
  using Ref = Derivation::Ref;

  explicit GroundedReasoner(ScriptBuilder& builder) : builder_(&builder) {}

  // A sentence already derived by the builder.
  Ref fact(ScriptBuilder::Step step);
  Ref assume(const Sentence& phi);
  Ref mp(Ref minor, Ref major) { return derivation_.mp(minor, major); }
  Ref conj(Ref a, Ref b) { return derivation_.conj(a, b); }
  Ref left(Ref c) { return derivation_.left(c); }
  Ref right(Ref c) { return derivation_.right(c); }
  Ref chain(Ref ab, Ref bc) { return derivation_.chain(ab, bc); }
  Ref discharge(Ref hyp, Ref body) { return derivation_.discharge(hyp, body); }
  Ref absurd(Ref bot, const Sentence& target) {
    return derivation_.absurd(bot, atoms_.abstract(target));
  }
  Ref axiom(HilbertAxiom axiom, const std::vector<Sentence>& args);

  Sentence sentence(Ref ref) const {
    return atoms_.concretize(derivation_.formula(ref));
  }

  // Emits the steps proving `ref` and returns the builder step.
  ScriptBuilder::Step conclude(Ref ref);

 private:
  ScriptBuilder* builder_;
  Derivation derivation_;
  AtomTable atoms_;
  std::vector<ScriptBuilder::Step> premise_steps_;
};

}  // namespace atm

#endif  // ATM_BUILDER_H_
