#include "atm/builder.h"

#include <algorithm>

#include "atm/checker.h"
#include "atm/text.h"

namespace atm {

Prop AtomTable::abstract(const Sentence& phi) {
  switch (phi.kind()) {
    case SentenceKind::kFalsum:
      return Prop::Bot();
    case SentenceKind::kConj:
      return Prop::Conj(abstract(phi.left()), abstract(phi.right()));
    case SentenceKind::kDisj:
      return Prop::Disj(abstract(phi.left()), abstract(phi.right()));
    case SentenceKind::kImpl:
      return Prop::Impl(abstract(phi.left()), abstract(phi.right()));
    default:
      break;
  }
  auto [it, inserted] =
      index_.try_emplace(phi, static_cast<std::uint32_t>(atoms_.size()));
  if (inserted) atoms_.push_back(phi);
  return Prop::Var(it->second);
}

Sentence AtomTable::concretize(const Prop& p) const {
  return instantiate(p, std::span<const Sentence>(atoms_));
}

// ---------------------------------------------------------------------------

ScriptBuilder::Step ScriptBuilder::add(ProofStep step) {
  Sentence s = derive_step(step, sentences_, *table_);
  if (auto it = by_sentence_.find(s); it != by_sentence_.end()) {
    return it->second;
  }
  steps_.push_back(std::move(step));
  sentences_.push_back(s);
  by_sentence_.emplace(std::move(s), steps_.size());
  return steps_.size();
}

ScriptBuilder::Step ScriptBuilder::lax(HilbertAxiom axiom,
                                       std::vector<Term> terms) {
  return add(LogicalAxiomStep{axiom, std::move(terms)});
}

ScriptBuilder::Step ScriptBuilder::nlax(int scheme, SchemeBindings bindings) {
  return add(NonlogicalAxiomStep{scheme, std::move(bindings)});
}

ScriptBuilder::Step ScriptBuilder::conj(Step left, Step right) {
  return add(ConjStep{left, right});
}

ScriptBuilder::Step ScriptBuilder::mp(Step minor, Step major) {
  return add(MpStep{minor, major});
}

ScriptBuilder::Step ScriptBuilder::release(Step premise) {
  return add(ReleaseStep{premise});
}

ScriptBuilder::Step ScriptBuilder::grounded_axiom(
    HilbertAxiom axiom, const std::vector<Sentence>& args) {
  Sentence target =
      instantiate(axiom_schema(axiom), std::span<const Sentence>(args));
  if (auto done = find(target)) return *done;
  std::vector<Term> terms;
  terms.reserve(args.size());
  for (const Sentence& phi : args) terms.push_back(dot(phi));
  Step guard = nlax(1, SchemeBindings{std::nullopt, terms[0], std::nullopt});
  for (std::size_t i = 1; i < terms.size(); ++i) {
    guard = conj(guard,
                 nlax(1, SchemeBindings{std::nullopt, terms[i], std::nullopt}));
  }
  Step guarded = lax(axiom, std::move(terms));
  return release(mp(guard, guarded));
}

ScriptBuilder::Step ScriptBuilder::realize(const IpcProof& proof,
                                           std::span<const Sentence> atoms,
                                           std::span<const Step> premises) {
  std::vector<Step> line_steps;
  line_steps.reserve(proof.lines.size());
  for (const IpcLine& line : proof.lines) {
    if (const auto* ax = std::get_if<IpcAxiomLine>(&line)) {
      std::vector<Sentence> args;
      for (const Prop& a : ax->args) args.push_back(instantiate(a, atoms));
      line_steps.push_back(grounded_axiom(ax->axiom, args));
    } else if (const auto* pr = std::get_if<IpcPremiseLine>(&line)) {
      if (pr->premise == 0 || pr->premise > premises.size()) {
        throw Error("realize: no step for premise " +
                    std::to_string(pr->premise));
      }
      Step step = premises[pr->premise - 1];
      Sentence expected = instantiate(proof.premises.at(pr->premise - 1), atoms);
      if (!(sentence(step) == expected)) {
        throw Error("realize: premise " + std::to_string(pr->premise) +
                    " should be " + to_string(expected) + " but step " +
                    std::to_string(step) + " proves " +
                    to_string(sentence(step)));
      }
      line_steps.push_back(step);
    } else {
      const auto& m = std::get<IpcMpLine>(line);
      line_steps.push_back(
          mp(line_steps.at(m.minor - 1), line_steps.at(m.major - 1)));
    }
  }
  if (line_steps.empty()) throw Error("realize: empty proof");
  return line_steps.back();
}

void ScriptBuilder::comment(std::string text) {
  comments_[steps_.size() + 1].push_back(std::move(text));
}

std::optional<ScriptBuilder::Step> ScriptBuilder::find(
    const Sentence& phi) const {
  if (auto it = by_sentence_.find(phi); it != by_sentence_.end()) {
    return it->second;
  }
  return std::nullopt;
}

namespace {

std::vector<std::size_t> references(const ProofStep& step) {
  if (const auto* c = std::get_if<ConjStep>(&step)) return {c->left, c->right};
  if (const auto* m = std::get_if<MpStep>(&step)) return {m->minor, m->major};
  if (const auto* r = std::get_if<ReleaseStep>(&step)) return {r->premise};
  return {};
}

}  // namespace

ProofScript ScriptBuilder::finish(Step goal, std::string name,
                                  std::string description) const {
  std::vector<bool> needed(steps_.size() + 1, false);
  needed.at(goal) = true;
  for (Step s = goal; s >= 1; --s) {
    if (!needed[s]) continue;
    for (std::size_t r : references(steps_[s - 1])) needed[r] = true;
  }
  std::vector<std::size_t> renumber(steps_.size() + 1, 0);
  ProofScript script;
  script.name = std::move(name);
  script.description = std::move(description);
  script.claim = sentence(goal);
  for (Step s = 1; s <= goal; ++s) {
    if (auto it = comments_.find(s); it != comments_.end()) {
      auto& dst = script.comments[script.steps.size() + 1];
      dst.insert(dst.end(), it->second.begin(), it->second.end());
    }
    if (!needed[s]) continue;
    ProofStep step = steps_[s - 1];
    if (auto* c = std::get_if<ConjStep>(&step)) {
      c->left = renumber[c->left];
      c->right = renumber[c->right];
    } else if (auto* m = std::get_if<MpStep>(&step)) {
      m->minor = renumber[m->minor];
      m->major = renumber[m->major];
    } else if (auto* r = std::get_if<ReleaseStep>(&step)) {
      r->premise = renumber[r->premise];
    }
    script.steps.push_back(std::move(step));
    renumber[s] = script.steps.size();
  }
  // Comments attached after the last kept step would dangle.
  for (auto it = script.comments.begin(); it != script.comments.end();) {
    it = it->first > script.steps.size() ? script.comments.erase(it)
                                         : std::next(it);
  }
  return script;
}

// ---------------------------------------------------------------------------

GroundedReasoner::Ref GroundedReasoner::fact(ScriptBuilder::Step step) {
  premise_steps_.push_back(step);
  return derivation_.premise(atoms_.abstract(builder_->sentence(step)));
}

GroundedReasoner::Ref GroundedReasoner::assume(const Sentence& phi) {
  return derivation_.assume(atoms_.abstract(phi));
}

GroundedReasoner::Ref GroundedReasoner::axiom(
    HilbertAxiom axiom, const std::vector<Sentence>& args) {
  std::vector<Prop> props;
  for (const Sentence& s : args) props.push_back(atoms_.abstract(s));
  return derivation_.axiom(axiom, std::move(props));
}

ScriptBuilder::Step GroundedReasoner::conclude(Ref ref) {
  IpcProof proof = derivation_.linearize(ref);
  return builder_->realize(proof, atoms_.atoms(), premise_steps_);
}

}  // namespace atm
