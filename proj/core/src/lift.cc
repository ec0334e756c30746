#include "atm/lift.h"

#include <unordered_map>
#include <vector>

#include "atm/axioms.h"
#include "atm/checker.h"

namespace atm {

Sentence lifted_conclusion(const Prop& theorem, std::span<const Term> terms) {
  Sentence body = Sentence::A(instantiate(theorem, terms));
  if (terms.empty()) return body;
  return Sentence::Impl(meaningfulness_guard(terms), body);
}

namespace {

using Step = ScriptBuilder::Step;

SchemeBindings bind_t(Term t) {
  return SchemeBindings{std::nullopt, std::move(t), std::nullopt};
}

SchemeBindings bind_st(Term s, Term t) {
  return SchemeBindings{std::move(s), std::move(t), std::nullopt};
}

// Emits G -> A[tau B_l] for every line l of the proof, G being the
// meaningfulness guard of the terms.
class Lifter {
 public:
  Lifter(ScriptBuilder& builder, std::span<const Term> terms)
      : b_(builder), terms_(terms), guard_(meaningfulness_guard(terms)) {}

  Step axiom_line(const IpcAxiomLine& line) {
    std::vector<Term> args;
    std::vector<Step> meaningful_args;
    for (const Prop& a : line.args) {
      args.push_back(tau(a));
      meaningful_args.push_back(meaningful(a));
    }
    Step guarded = b_.lax(line.axiom, args);
    GroundedReasoner r(b_);
    auto g = r.assume(guard_);
    auto inner = r.mp(g, r.fact(meaningful_args[0]));
    for (std::size_t i = 1; i < meaningful_args.size(); ++i) {
      inner = r.conj(inner, r.mp(g, r.fact(meaningful_args[i])));
    }
    return r.conclude(r.discharge(g, r.mp(inner, r.fact(guarded))));
  }

  Step mp_line(const Prop& phi, const Prop& psi, Step minor, Step major) {
    Step closure = b_.nlax(5, bind_st(tau(phi), tau(psi)));
    GroundedReasoner r(b_);
    auto g = r.assume(guard_);
    auto both = r.conj(r.mp(g, r.fact(minor)), r.mp(g, r.fact(major)));
    return r.conclude(r.discharge(g, r.mp(both, r.fact(closure))));
  }

 private:
  Term tau(const Prop& p) const { return instantiate(p, terms_); }

  // G -> M[tau p].
  Step meaningful(const Prop& p) {
    if (auto it = meaningful_.find(p); it != meaningful_.end()) {
      return it->second;
    }
    Step result = 0;
    GroundedReasoner r(b_);
    auto g = r.assume(guard_);
    switch (p.kind()) {
      case PropKind::kVar: {
        // The guard is left-associated: ((M1 & M2) & ...) & Mn.
        const std::size_t n = terms_.size();
        auto c = g;
        for (std::size_t i = n - 1; i > p.var(); --i) c = r.left(c);
        if (p.var() > 0) c = r.right(c);
        result = r.conclude(r.discharge(g, c));
        break;
      }
      case PropKind::kBot: {
        Step m = b_.nlax(1, bind_t(Term::Bot()));
        result = r.conclude(r.discharge(g, r.fact(m)));
        break;
      }
      default: {
        Step ms = meaningful(p.left());
        Step mt = meaningful(p.right());
        Step scheme = b_.nlax(2, bind_st(tau(p.left()), tau(p.right())));
        auto both = r.conj(r.mp(g, r.fact(ms)), r.mp(g, r.fact(mt)));
        auto s2 = r.fact(scheme);
        auto iff = p.kind() == PropKind::kConj   ? r.left(r.left(s2))
                   : p.kind() == PropKind::kDisj ? r.right(r.left(s2))
                                                 : r.right(s2);
        result = r.conclude(r.discharge(g, r.mp(both, r.left(iff))));
        break;
      }
    }
    meaningful_.emplace(p, result);
    return result;
  }

  ScriptBuilder& b_;
  std::span<const Term> terms_;
  Sentence guard_;
  std::unordered_map<Prop, Step> meaningful_;
};

// Without terms every axiom argument is closed, so its guard is discharged
// directly by scheme 1.
Step closed_axiom_line(ScriptBuilder& b, const IpcAxiomLine& line) {
  std::vector<Term> args;
  for (const Prop& a : line.args) {
    args.push_back(instantiate(a, std::span<const Term>()));
  }
  Step guard = b.nlax(1, bind_t(args[0]));
  for (std::size_t i = 1; i < args.size(); ++i) {
    guard = b.conj(guard, b.nlax(1, bind_t(args[i])));
  }
  return b.mp(guard, b.lax(line.axiom, args));
}

Step closed_mp_line(ScriptBuilder& b, const Prop& phi, const Prop& psi,
                    Step minor, Step major) {
  std::span<const Term> none;
  Step closure =
      b.nlax(5, bind_st(instantiate(phi, none), instantiate(psi, none)));
  return b.mp(b.conj(minor, major), closure);
}

}  // namespace

Step lift_into(ScriptBuilder& builder, const IpcProof& proof,
               std::span<const Term> terms) {
  for (const IpcLine& line : proof.lines) {
    if (std::holds_alternative<IpcPremiseLine>(line)) {
      throw LiftError("lift: the proof uses a premise; only Hilbert axioms "
                      "and modus ponens are allowed");
    }
  }
  if (!proof.premises.empty()) {
    throw LiftError("lift: the proof has premises");
  }
  std::vector<Prop> formulas;
  try {
    formulas = check_ipc(proof);
  } catch (const IpcError& e) {
    throw LiftError(std::string("lift: invalid proof: ") + e.what());
  }
  if (formulas.empty()) throw LiftError("lift: empty proof");
  std::uint32_t bound = 0;
  for (const Prop& f : formulas) bound = std::max(bound, f.var_bound());
  if (proof.vars.size() > bound) bound = static_cast<std::uint32_t>(proof.vars.size());
  if (terms.size() != bound) {
    throw LiftError("lift: the proof has " + std::to_string(bound) +
                    " variables but " + std::to_string(terms.size()) +
                    " terms were given");
  }

  std::optional<Lifter> lifter;
  if (!terms.empty()) lifter.emplace(builder, terms);
  std::vector<Step> steps;
  try {
    for (std::size_t i = 0; i < proof.lines.size(); ++i) {
      const IpcLine& line = proof.lines[i];
      if (const auto* ax = std::get_if<IpcAxiomLine>(&line)) {
        steps.push_back(lifter ? lifter->axiom_line(*ax)
                               : closed_axiom_line(builder, *ax));
        continue;
      }
      const auto& m = std::get<IpcMpLine>(line);
      const Prop& phi = formulas[m.minor - 1];
      const Prop& psi = formulas[i];
      Step minor = steps[m.minor - 1];
      Step major = steps[m.major - 1];
      steps.push_back(lifter ? lifter->mp_line(phi, psi, minor, major)
                             : closed_mp_line(builder, phi, psi, minor, major));
    }
  } catch (const StepError& e) {
    throw LiftError(std::string("lift: internal step failed: ") + e.what());
  }
  Sentence expected = lifted_conclusion(formulas.back(), terms);
  if (!(builder.sentence(steps.back()) == expected)) {
    throw LiftError("lift: derived sentence differs from the expected shape");
  }
  return steps.back();
}

ProofScript subjunctive_lift(const IpcProof& proof, std::span<const Term> terms,
                             const ConstantTable& table, std::string name) {
  ScriptBuilder builder(table);
  Step goal = lift_into(builder, proof, terms);
  if (name.empty()) name = proof.name.empty() ? "lift" : "lift-" + proof.name;
  return builder.finish(goal, std::move(name));
}

}  // namespace atm
