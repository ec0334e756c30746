#include "atm/corpus.h"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>

#include "atm/builder.h"
#include "atm/lift.h"
#include "atm/text.h"
#include "atm/universe.h"

#ifndef ATM_CORPUS_DIR
#define ATM_CORPUS_DIR "corpus"
#endif

namespace atm {

namespace {

using S = Sentence;
using Step = ScriptBuilder::Step;

const Term kL1 = Term::Liar(1);
const Term kL2 = Term::Liar(2);
const Term kBotDot = Term::Bot();

}  // namespace

const std::vector<RequiredEntry>& required_entries() {
  static const std::vector<RequiredEntry> entries{
      {"thm1a", "if the truth liar L1 is meaningful then bot is assertible",
       S::Impl(S::M(kL1), S::A(kBotDot))},
      {"thm1b", "L1 is not meaningless", S::Not(S::Not(S::M(kL1)))},
      {"thm1c", "if the assertibility liar L2 is assertible then so is bot",
       S::Impl(S::A(kL2), S::A(kBotDot))},
      {"thm1d", "L2 is not unassertible", S::Not(S::Not(S::A(kL2)))},
      {"anomaly-capture-1", "if L1 is meaningless then bot is assertible",
       S::Impl(S::Not(S::M(kL1)), S::A(kBotDot))},
      {"anomaly-capture-2", "if L2 is unassertible then bot is assertible",
       S::Impl(S::Not(S::A(kL2)), S::A(kBotDot))},
      {"not-not-assertible-bot", "bot is not unassertible",
       S::Not(S::Not(S::A(kBotDot)))},
  };
  return entries;
}

std::string default_corpus_dir() { return ATM_CORPUS_DIR; }

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw CorpusError("corpus directory not found: " + dir);
  }
  std::vector<fs::path> files;
  for (const auto& item : fs::directory_iterator(dir)) {
    if (item.is_regular_file() && item.path().extension() == ".atm") {
      files.push_back(item.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::map<std::string, CorpusEntry> by_id;
  for (const fs::path& path : files) {
    ProofScript script;
    try {
      script = load_script(path.string());
    } catch (const Error& e) {
      throw CorpusError(path.filename().string() + ": " + e.what());
    }
    if (!script.claim) {
      throw CorpusError(path.filename().string() + ": no claim");
    }
    std::string id = path.stem().string();
    CorpusEntry entry{id, script.description, script, *script.claim,
                      path.string()};
    by_id.emplace(id, std::move(entry));
  }
  std::vector<CorpusEntry> out;
  for (const RequiredEntry& req : required_entries()) {
    auto it = by_id.find(req.id);
    if (it == by_id.end()) {
      throw CorpusError("corpus entry missing: " + req.id);
    }
    if (!(it->second.expected == req.conclusion)) {
      throw CorpusError(req.id + ": claim " + to_string(it->second.expected) +
                        " differs from " + to_string(req.conclusion));
    }
    it->second.expected = req.conclusion;
    out.push_back(std::move(it->second));
    by_id.erase(it);
  }
  for (auto& [id, entry] : by_id) out.push_back(std::move(entry));
  return out;
}

std::size_t CorpusReport::passed() const {
  return static_cast<std::size_t>(std::count_if(
      results.begin(), results.end(), [](const auto& r) { return r.pass; }));
}

CorpusReport run_corpus(const std::vector<CorpusEntry>& entries,
                        const ConstantTable& table, std::uint32_t level_cap) {
  CorpusReport out;
  for (const CorpusEntry& entry : entries) {
    CorpusResult r;
    r.id = entry.id;
    r.report = check(entry.script, table);
    r.conclusion_matches =
        r.report.conclusion && *r.report.conclusion == entry.expected;
    ConstructionState state = simulate(
        relevant_closure(std::span(&entry.expected, 1), table), table,
        level_cap);
    r.in_countermodel = state.first_added(entry.expected);
    r.pass = r.report.ok && r.conclusion_matches && r.report.conclusion_grounded &&
             !r.in_countermodel;
    out.results.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Script construction.

namespace {

// Propositional theorems used under the lift, proved by natural deduction.
IpcProof ipc_theorem(const std::string& name,
                     const std::function<Derivation::Ref(Derivation&)>& body) {
  Derivation d;
  IpcProof proof = d.linearize(body(d));
  proof.name = name;
  return proof;
}

// (a <-> b) -> ((a <-> ~b) -> bot)
IpcProof no_fixed_negation() {
  return ipc_theorem("no-fixed-negation", [](Derivation& d) {
    const Prop a = Prop::Var(0), b = Prop::Var(1);
    auto h1 = d.assume(Prop::Iff(a, b));
    auto h2 = d.assume(Prop::Iff(a, Prop::Not(b)));
    auto x = d.assume(a);
    auto not_a = d.discharge(x, d.mp(d.mp(x, d.left(h1)), d.mp(x, d.left(h2))));
    auto y = d.assume(b);
    auto not_b = d.discharge(y, d.mp(d.mp(y, d.right(h1)), not_a));
    auto bot = d.mp(d.mp(not_b, d.right(h2)), not_a);
    return d.discharge(h1, d.discharge(h2, bot));
  });
}

// a -> ((a <-> ~c) -> ((a -> c) -> bot))
IpcProof captured_negation() {
  return ipc_theorem("captured-negation", [](Derivation& d) {
    const Prop a = Prop::Var(0), c = Prop::Var(1);
    auto ha = d.assume(a);
    auto hi = d.assume(Prop::Iff(a, Prop::Not(c)));
    auto hc = d.assume(Prop::Impl(a, c));
    auto bot = d.mp(d.mp(ha, hc), d.mp(ha, d.left(hi)));
    return d.discharge(ha, d.discharge(hi, d.discharge(hc, bot)));
  });
}

// (a <-> b) -> (a -> b)
IpcProof iff_forward() {
  return ipc_theorem("iff-forward", [](Derivation& d) {
    auto h = d.assume(Prop::Iff(Prop::Var(0), Prop::Var(1)));
    return d.discharge(h, d.left(h));
  });
}

SchemeBindings bind_t(Term t) { return {std::nullopt, std::move(t), std::nullopt}; }
SchemeBindings bind_st(Term s, Term t) {
  return {std::move(s), std::move(t), std::nullopt};
}
SchemeBindings bind_tt(Term t, Term t2) {
  return {std::nullopt, std::move(t), std::move(t2)};
}

// Scheme 2 at s, t, read backwards: M[s o t] -> M[s] & M[t], selecting the
// biconditional of the connective.
GroundedReasoner::Ref parts_meaningful(GroundedReasoner& r, Step scheme,
                                       TermKind connective) {
  auto s2 = r.fact(scheme);
  auto iff = connective == TermKind::kConj   ? r.left(r.left(s2))
             : connective == TermKind::kDisj ? r.right(r.left(s2))
                                             : r.right(s2);
  return r.right(iff);
}

// M[L1] -> A['bot']
Step prove_thm1a(ScriptBuilder& b) {
  const Term t = Term::T(kL1);
  const Term theta = Term::Not(t);
  const Term iff_t = Term::Iff(kL1, t);
  const Term iff_theta = Term::Iff(kL1, theta);
  b.comment("L1 <->. T.[L1] and L1 <->. (T.[L1] ->. bot.) are both assertible");
  Step s7 = b.nlax(7, bind_t(kL1));
  Step s3 = b.nlax(3, bind_t(iff_t));
  Step s2_iff = b.nlax(2, bind_st(Term::Impl(kL1, t), Term::Impl(t, kL1)));
  Step s2_impl = b.nlax(2, bind_st(kL1, t));
  Step s9 = b.nlax(9, bind_tt(kL1, theta));
  b.comment("lifted: (a <-> b) -> ((a <-> ~b) -> bot) at L1, T.[L1]");
  Step lifted = lift_into(b, no_fixed_negation(), std::vector<Term>{kL1, t});
  Step n5a = b.nlax(5, bind_st(iff_t, Term::Impl(iff_theta, kBotDot)));
  Step n5b = b.nlax(5, bind_st(iff_theta, kBotDot));
  b.comment("main argument");
  GroundedReasoner r(b);
  auto h = r.assume(S::M(kL1));
  auto a_iff_t = r.mp(h, r.fact(s7));
  auto m_iff_t = r.mp(a_iff_t, r.fact(s3));
  auto m_impl = r.left(r.mp(m_iff_t, parts_meaningful(r, s2_iff, TermKind::kConj)));
  auto m_t = r.right(r.mp(m_impl, parts_meaningful(r, s2_impl, TermKind::kImpl)));
  auto a_lifted = r.mp(r.conj(h, m_t), r.fact(lifted));
  auto a_step = r.mp(r.conj(a_iff_t, a_lifted), r.fact(n5a));
  auto a_bot = r.mp(r.conj(r.mp(h, r.fact(s9)), a_step), r.fact(n5b));
  return r.conclude(r.discharge(h, a_bot));
}

// ~~M[L1]
Step prove_thm1b(ScriptBuilder& b) {
  const Term theta = Term::Not(Term::T(kL1));
  const Term iff = Term::Iff(theta, kL1);
  Step s8 = b.nlax(8, bind_t(kL1));
  Step s3_theta = b.nlax(3, bind_t(theta));
  Step s9 = b.nlax(9, bind_tt(theta, kL1));
  Step s3_iff = b.nlax(3, bind_t(iff));
  Step s2_iff = b.nlax(2, bind_st(Term::Impl(theta, kL1), Term::Impl(kL1, theta)));
  Step s2_impl = b.nlax(2, bind_st(theta, kL1));
  b.comment("from ~M[L1], L1 turns out meaningful");
  GroundedReasoner r(b);
  auto h = r.assume(S::Not(S::M(kL1)));
  auto m_theta = r.mp(r.mp(h, r.fact(s8)), r.fact(s3_theta));
  auto m_iff = r.mp(r.mp(m_theta, r.fact(s9)), r.fact(s3_iff));
  auto m_impl = r.left(r.mp(m_iff, parts_meaningful(r, s2_iff, TermKind::kConj)));
  auto m_l1 = r.right(r.mp(m_impl, parts_meaningful(r, s2_impl, TermKind::kImpl)));
  return r.conclude(r.discharge(h, r.mp(m_l1, h)));
}

// A[L2] -> A['bot']
Step prove_thm1c(ScriptBuilder& b) {
  const Term c = Term::A(kL2);
  const Term theta = Term::Not(c);
  const Term iff = Term::Iff(kL2, theta);
  const Term capture = Term::Impl(kL2, c);
  const Term tail = Term::Impl(capture, kBotDot);
  Step m_l2 = b.nlax(1, bind_t(kL2));
  Step m_c = b.nlax(1, bind_t(c));
  Step s9 = b.nlax(9, bind_tt(kL2, theta));
  Step s6 = b.nlax(6, bind_t(kL2));
  b.comment("lifted: a -> ((a <-> ~c) -> ((a -> c) -> bot)) at L2, A.[L2]");
  Step lifted = lift_into(b, captured_negation(), std::vector<Term>{kL2, c});
  Step n5a = b.nlax(5, bind_st(kL2, Term::Impl(iff, tail)));
  Step n5b = b.nlax(5, bind_st(iff, tail));
  Step n5c = b.nlax(5, bind_st(capture, kBotDot));
  b.comment("main argument");
  GroundedReasoner r(b);
  auto h = r.assume(S::A(kL2));
  auto m = r.fact(m_l2);
  auto a_lifted = r.mp(r.conj(m, r.fact(m_c)), r.fact(lifted));
  auto x = r.mp(r.conj(h, a_lifted), r.fact(n5a));
  auto y = r.mp(r.conj(r.mp(m, r.fact(s9)), x), r.fact(n5b));
  auto a_bot = r.mp(r.conj(r.mp(m, r.fact(s6)), y), r.fact(n5c));
  return r.conclude(r.discharge(h, a_bot));
}

// ~~A[L2]
Step prove_thm1d(ScriptBuilder& b) {
  const Term theta = Term::Not(Term::A(kL2));
  b.comment("capture at the quotation of ~A[L2]");
  Step m_theta = b.nlax(1, bind_t(theta));
  Step captured = b.release(b.mp(m_theta, b.nlax(6, bind_t(theta))));
  Step m_l2 = b.nlax(1, bind_t(kL2));
  Step s9 = b.nlax(9, bind_tt(theta, kL2));
  b.comment("lifted: (a <-> b) -> (a -> b) at A.[L2] ->. bot., L2");
  Step lifted = lift_into(b, iff_forward(), std::vector<Term>{theta, kL2});
  Step n5a = b.nlax(5, bind_st(Term::Iff(theta, kL2), Term::Impl(theta, kL2)));
  Step n5b = b.nlax(5, bind_st(theta, kL2));
  b.comment("main argument");
  GroundedReasoner r(b);
  auto h = r.assume(S::Not(S::A(kL2)));
  auto m = r.fact(m_theta);
  auto a_theta = r.mp(h, r.fact(captured));
  auto a_lifted = r.mp(r.conj(m, r.fact(m_l2)), r.fact(lifted));
  auto a_impl = r.mp(r.conj(r.mp(m, r.fact(s9)), a_lifted), r.fact(n5a));
  auto a_l2 = r.mp(r.conj(a_theta, a_impl), r.fact(n5b));
  return r.conclude(r.discharge(h, r.mp(a_l2, h)));
}

// bot -> A['bot']
Step capture_bot(ScriptBuilder& b) {
  b.comment("capture at bot.");
  Step m = b.nlax(1, bind_t(kBotDot));
  return b.release(b.mp(m, b.nlax(6, bind_t(kBotDot))));
}

Step prove_anomaly(ScriptBuilder& b, Step (*premise)(ScriptBuilder&)) {
  Step p = premise(b);
  Step c = capture_bot(b);
  GroundedReasoner r(b);
  return r.conclude(r.chain(r.fact(p), r.fact(c)));
}

// ~~A['bot']
Step prove_not_not_assertible_bot(ScriptBuilder& b) {
  Step a = prove_thm1a(b);
  Step nn = prove_thm1b(b);
  b.comment("~A['bot'] refutes M[L1], which cannot be refuted");
  GroundedReasoner r(b);
  auto h = r.assume(S::Not(S::A(kBotDot)));
  auto not_m = r.chain(r.fact(a), h);
  return r.conclude(r.discharge(h, r.mp(not_m, r.fact(nn))));
}

}  // namespace

std::vector<ProofScript> build_corpus_scripts(const ConstantTable& table) {
  using Builder = Step (*)(ScriptBuilder&);
  const std::map<std::string, Builder> builders{
      {"thm1a", prove_thm1a},
      {"thm1b", prove_thm1b},
      {"thm1c", prove_thm1c},
      {"thm1d", prove_thm1d},
      {"anomaly-capture-1",
       [](ScriptBuilder& b) { return prove_anomaly(b, prove_thm1b); }},
      {"anomaly-capture-2",
       [](ScriptBuilder& b) { return prove_anomaly(b, prove_thm1d); }},
      {"not-not-assertible-bot", prove_not_not_assertible_bot},
  };
  std::vector<ProofScript> out;
  for (const RequiredEntry& req : required_entries()) {
    ScriptBuilder b(table);
    Step goal = builders.at(req.id)(b);
    ProofScript script = b.finish(goal, req.id, req.description);
    if (!(*script.claim == req.conclusion)) {
      throw Error(req.id + ": built " + to_string(*script.claim) +
                  " instead of " + to_string(req.conclusion));
    }
    out.push_back(std::move(script));
  }
  return out;
}

}  // namespace atm
