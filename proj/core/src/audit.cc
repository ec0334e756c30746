#include "atm/audit.h"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "atm/axioms.h"
#include "atm/ipc.h"
#include "atm/text.h"

namespace atm {

std::size_t AuditReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [](const auto& r) { return !r.pass; }));
}

std::size_t AuditReport::count(const std::string& property) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(),
                    [&](const auto& r) { return r.property == property; }));
}

std::size_t AuditReport::failures(const std::string& property) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [&](const auto& r) {
        return r.property == property && !r.pass;
      }));
}

void AuditReport::append(const AuditReport& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
  diagnostics.insert(diagnostics.end(), other.diagnostics.begin(),
                     other.diagnostics.end());
}

namespace {

nlohmann::json record_json(const AuditRecord& r) {
  nlohmann::json j;
  j["id"] = r.id;
  j["property"] = r.property;
  j["expected"] = r.expected;
  j["observed"] = r.observed;
  j["point"] = r.point ? nlohmann::json(to_string(*r.point)) : nullptr;
  j["pass"] = r.pass;
  return j;
}

}  // namespace

std::string to_json(const AuditReport& report, bool include_passing) {
  nlohmann::json j;
  j["audit"] = report.name;
  j["total"] = report.records.size();
  j["failures"] = report.failures();
  j["pass"] = report.ok();
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records) {
    if (include_passing || !r.pass) records.push_back(record_json(r));
  }
  j["records"] = std::move(records);
  nlohmann::json diagnostics = nlohmann::json::array();
  for (const auto& r : report.diagnostics) diagnostics.push_back(record_json(r));
  j["diagnostics"] = std::move(diagnostics);
  return j.dump(2);
}

std::string to_human(const AuditReport& report, bool include_passing) {
  std::ostringstream os;
  os << report.name << ": " << report.records.size() << " records, "
     << report.failures() << " failures\n";
  for (const auto& r : report.records) {
    if (r.pass && !include_passing) continue;
    os << (r.pass ? "  pass " : "  FAIL ") << r.property << ' ' << r.id
       << ": expected " << r.expected << ", observed " << r.observed << '\n';
  }
  for (const auto& r : report.diagnostics) {
    os << "  note " << r.property << ' ' << r.id << ": " << r.observed
       << '\n';
  }
  return os.str();
}

std::vector<Term> default_term_pool() {
  static const char* const kTerms[] = {
      // grounded evaluations
      "bot.", "L3", "L2", "'A[L1]'", "'M[L1]'", "'A[L2]'", "'M[L2]'",
      "'bot -> bot'", "'A[L2] -> bot'", "'T[bot.]'", "'T[A.[L1]]'",
      "'M[L1] & A[L2]'", "'M[L1] | bot'", R"(L2 ->. bot.)",
      R"(L2 /\. 'M[L1]')", "A.[L1]", "M.[L1]", "T.[L2]", "T.[bot.]",
      "'T[L2] -> A[L1]'", "~. A.[L2]", "'bot & bot'", "'A[bot.] -> M[L2]'",
      "'T[T.[bot.]]'", R"(M.[L2] \/. bot.)", R"(A.[L1] ->. A.[L2])", "'T[L2]'",
      "T.[A.[L2]]",
      // ungrounded evaluations
      "L1", "'T[L1]'", "T.[L1]", R"(L1 ->. bot.)", R"(L1 /\. bot.)",
      R"(L1 \/. L2)", "'T[L1] & M[L2]'", "T.[T.[L1]]", "'T[L1] -> T[L1]'",
      "~. L1", R"(L2 ->. L1)", R"(T.[L1] \/. bot.)", "'T[L1] | bot'",
      R"(T.[L1] /\. A.[L2])", "'M[L1] -> T[L1]'"};
  std::vector<Term> pool;
  for (const char* text : kTerms) pool.push_back(parse_term(text));
  return pool;
}

namespace {

class Sampler {
 public:
  Sampler(const AxiomSampleSpec& spec, const ConstantTable& table)
      : table_(table), rng_(spec.seed) {
    for (const Term& t : spec.pool) {
      Sentence e = eval(t, table);
      (grounded(e, table) ? grounded_ : ungrounded_).push_back(t);
      all_.push_back(t);
    }
    if (grounded_.empty()) throw Error("term pool has no grounded term");
  }

  // Terms for `n` slots; with `mixed`, one random slot gets a term with
  // ungrounded evaluation.
  std::vector<Term> terms(std::size_t n, bool mixed) {
    std::vector<Term> out;
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(pick(mixed ? all_ : grounded_));
    }
    if (mixed && !ungrounded_.empty()) out[index(n)] = pick(ungrounded_);
    return out;
  }

  Term pick(const std::vector<Term>& from) { return from[index(from.size())]; }

  // A term with the same evaluation as t.
  Term same_eval(const Term& t) {
    Sentence e = eval(t, table_);
    std::vector<Term> candidates{t, dot(e)};
    for (const Term& p : all_) {
      if (eval(p, table_) == e) candidates.push_back(p);
    }
    return pick(candidates);
  }

  bool has_ungrounded() const { return !ungrounded_.empty(); }

 private:
  std::size_t index(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  const ConstantTable& table_;
  std::mt19937_64 rng_;
  std::vector<Term> grounded_, ungrounded_, all_;
};

SchemeBindings scheme_bindings(int scheme, Sampler& sampler, bool mixed) {
  SchemeBindings b;
  switch (scheme) {
    case 1:
      b.t = sampler.terms(1, false)[0];
      break;
    case 2:
    case 4:
    case 5: {
      auto ts = sampler.terms(2, mixed);
      b.s = ts[0];
      b.t = ts[1];
      break;
    }
    case 9:
      b.t = sampler.terms(1, mixed)[0];
      b.t_prime = sampler.same_eval(*b.t);
      break;
    default:
      b.t = sampler.terms(1, mixed)[0];
      break;
  }
  return b;
}

}  // namespace

std::vector<AxiomInstance> sample_axiom_instances(const AxiomSampleSpec& spec,
                                                  const ConstantTable& table) {
  Sampler sampler(spec, table);
  std::vector<AxiomInstance> out;
  constexpr int kAttempts = 256;
  auto draw = [&](const std::string& family, auto&& make) {
    std::set<Sentence> seen;
    for (std::size_t k = 0; k < spec.per_family; ++k) {
      const bool mixed = k % 2 == 1;
      for (int attempt = 0; attempt < kAttempts; ++attempt) {
        auto [sentence, grounded_terms] = make(mixed);
        if (!seen.insert(sentence).second) continue;
        out.push_back(AxiomInstance{family, grounded_terms, sentence});
        break;
      }
    }
  };
  for (int scheme = kFirstScheme; scheme <= kLastScheme; ++scheme) {
    draw("nlax " + std::to_string(scheme), [&](bool mixed) {
      SchemeBindings b = scheme_bindings(scheme, sampler, mixed);
      bool all_grounded = true;
      for (const auto* t : {&b.s, &b.t, &b.t_prime}) {
        if (*t && !grounded(eval(**t, table), table)) all_grounded = false;
      }
      return std::pair{nonlogical_axiom_instance(scheme, b, table),
                       all_grounded};
    });
  }
  for (HilbertAxiom axiom : kAllHilbertAxioms) {
    draw("lax " + to_string(axiom), [&](bool mixed) {
      auto ts = sampler.terms(axiom_arity(axiom), mixed);
      bool all_grounded = true;
      for (const Term& t : ts) {
        if (!grounded(eval(t, table), table)) all_grounded = false;
      }
      return std::pair{logical_axiom_instance(axiom, ts), all_grounded};
    });
  }
  return out;
}

AuditReport audit_axioms(const AxiomSampleSpec& spec,
                         const ConstantTable& table, std::uint32_t level_cap) {
  AuditReport report;
  report.name = "axioms";
  {
    const Sentence bot = Sentence::Falsum();
    ConstructionState state =
        simulate(relevant_closure(std::span(&bot, 1), table), table, level_cap);
    auto p = state.first_added(bot);
    const Point expected{0, Nesting::Finite(0), 0};
    report.records.push_back(AuditRecord{
        "bot", "bot-placement", to_string(expected),
        p ? to_string(*p) : "absent", p, p == expected});
  }
  std::size_t k = 0;
  for (const AxiomInstance& inst : sample_axiom_instances(spec, table)) {
    ConstructionState state = simulate(
        relevant_closure(std::span(&inst.sentence, 1), table), table, level_cap);
    auto p = state.first_added(inst.sentence);
    AuditRecord r;
    r.id = inst.family + " #" + std::to_string(++k) + " " +
           (inst.grounded_terms ? "grounded" : "ungrounded") + ": " +
           to_string(inst.sentence);
    r.property = "axiom-not-in-F";
    r.expected = "absent";
    r.observed = p ? to_string(*p) : "absent";
    r.point = p;
    r.pass = !p;
    report.records.push_back(std::move(r));
  }
  return report;
}

std::vector<Sentence> default_audit_seeds(const ConstantTable& table) {
  using S = Sentence;
  const Term l1 = Term::Liar(1), l2 = Term::Liar(2), bot = dot(S::Falsum());
  std::vector<Sentence> seeds{
      S::Impl(S::M(l1), S::A(bot)),
      S::Not(S::Not(S::M(l1))),
      S::Impl(S::A(l2), S::A(bot)),
      S::Not(S::Not(S::A(l2))),
      S::Impl(S::Not(S::M(l1)), S::A(bot)),
      S::Impl(S::Not(S::A(l2)), S::A(bot)),
      S::Not(S::Not(S::A(bot))),
      eval(l1, table),
      eval(l2, table),
  };
  std::vector<Sentence> atoms;
  for (const Term& t : default_term_pool()) {
    atoms.push_back(S::A(t));
    atoms.push_back(S::T(t));
    atoms.push_back(S::M(t));
  }
  seeds.insert(seeds.end(), atoms.begin(), atoms.end());
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
  for (int k = 0; k < 600; ++k) {
    const Sentence& a = atoms[pick(rng)];
    const Sentence& b = atoms[pick(rng)];
    switch (k % 4) {
      case 0: seeds.push_back(S::Conj(a, b)); break;
      case 1: seeds.push_back(S::Disj(a, b)); break;
      case 2: seeds.push_back(S::Impl(a, b)); break;
      default: seeds.push_back(S::Impl(S::Impl(a, b), S::Not(a))); break;
    }
  }
  return seeds;
}

namespace {

std::string membership(const ConstructionState& state, Universe::Id id) {
  const auto& p = state.first_added(id);
  return p ? to_string(*p) : "absent";
}

}  // namespace

AuditReport audit_rules(const ConstructionState& state, std::size_t samples,
                        std::uint64_t seed) {
  const Universe& u = state.universe();
  const std::uint32_t cap = state.level_cap();
  AuditReport report;
  report.name = "rules";
  std::vector<Universe::Id> implications;
  for (Universe::Id id = 0; id < u.size(); ++id) {
    const Sentence& phi = u.sentence(id);
    if (phi.kind() == SentenceKind::kImpl) implications.push_back(id);
    if (phi.kind() == SentenceKind::kConj && state.first_added(id)) {
      const Point p = *state.first_added(id);
      auto by = [&](Universe::Id part) {
        return state.first_added(part) && *state.first_added(part) <= p;
      };
      report.records.push_back(AuditRecord{
          to_string(phi), "conj", "a conjunct in F by " + to_string(p),
          membership(state, u.left(id)) + " / " +
              membership(state, u.right(id)),
          p, by(u.left(id)) || by(u.right(id))});
    }
    if (phi.kind() == SentenceKind::kA) {
      const auto& t = state.first_added(u.target(id));
      if (t && t->level + 1 < cap) {
        const Point due{t->level + 1, Nesting::Finite(0), 0};
        const auto& a = state.first_added(id);
        report.records.push_back(AuditRecord{
            to_string(phi), "release", "in F by " + to_string(due),
            membership(state, id), a, a && *a <= due});
      }
    }
  }

  std::mt19937_64 rng(seed);
  std::shuffle(implications.begin(), implications.end(), rng);
  if (implications.size() > samples) implications.resize(samples);
  std::sort(implications.begin(), implications.end());
  std::size_t late = 0;
  std::optional<std::string> late_example;
  for (Universe::Id id : implications) {
    const auto& psi = state.first_added(u.right(id));
    AuditRecord r{to_string(u.sentence(id)), "mp", "", "", std::nullopt, true};
    if (!psi) {
      r.expected = "vacuous: consequent never in F";
      r.observed = "absent";
    } else if (state.by_end_of_level(u.left(id), psi->level)) {
      r.expected = "vacuous: antecedent in F by end of level " +
                   std::to_string(psi->level);
      r.observed = membership(state, u.left(id));
    } else {
      r.expected = "in F by end of level " + std::to_string(psi->level);
      r.point = state.first_added(id);
      r.observed = membership(state, id);
      r.pass = state.by_end_of_level(id, psi->level);
      if (!r.pass && psi->level + 1 < cap &&
          !state.by_end_of_level(id, psi->level + 1) &&
          !state.by_end_of_level(u.left(id), psi->level + 1)) {
        ++late;
        if (!late_example) late_example = r.id;
      }
    }
    report.records.push_back(std::move(r));
  }
  const std::size_t mp_failures = report.failures("mp");
  report.diagnostics.push_back(AuditRecord{
      "next-level", "mp-next-level",
      "implication in F by the end of the following level",
      std::to_string(mp_failures) + " late at the consequent's level, " +
          std::to_string(late) + " still missing one level later" +
          (late_example ? " (e.g. " + *late_example + ")" : ""),
      std::nullopt, late == 0});
  return report;
}

AuditReport audit_observations(const ConstructionState& state) {
  const Universe& u = state.universe();
  const std::uint32_t cap = state.level_cap();
  AuditReport report;
  report.name = "observations";
  std::size_t finite_stage_failures = 0, omega_failures = 0;
  std::size_t ungrounded_t_failures = 0;
  for (const TraceEntry& e : state.trace()) {
    for (Universe::Id id : e.added) {
      const Measures& m = state.measures(id);
      const bool ok =
          m.nesting > e.point.stage ||
          (m.nesting == e.point.stage && m.impl_complexity >= e.point.step);
      if (!ok) {
        (e.point.stage.is_omega() ? omega_failures : finite_stage_failures)++;
        if (u.sentence(id).kind() == SentenceKind::kT && !state.grounded(id)) {
          ++ungrounded_t_failures;
        }
      }
      report.records.push_back(AuditRecord{
          to_string(u.sentence(id)), "obs1",
          "n >= " + to_string(e.point.stage) + ", i >= " +
              std::to_string(e.point.step) + " when n is equal",
          "n = " + to_string(m.nesting) +
              ", i = " + std::to_string(m.impl_complexity),
          e.point, ok});
    }
  }
  report.diagnostics.push_back(AuditRecord{
      "by-stage", "obs1-split",
      "", std::to_string(finite_stage_failures) + " failures at finite stages, " +
          std::to_string(omega_failures) + " at stage omega, " +
          std::to_string(ungrounded_t_failures) + " of them ungrounded T atoms",
      std::nullopt, finite_stage_failures == 0});

  for (const TraceEntry& e : state.trace()) {
    for (Universe::Id id : e.added) {
      if (u.sentence(id).kind() != SentenceKind::kImpl) continue;
      const Universe::Id phi = u.left(id);
      report.records.push_back(AuditRecord{
          to_string(u.sentence(id)), "obs2",
          "antecedent not in F by end of level " +
              std::to_string(e.point.level),
          membership(state, phi), e.point,
          !state.by_end_of_level(phi, e.point.level)});
    }
  }

  for (std::uint32_t level = 0; level < cap; ++level) {
    const Point p{level, Nesting::Finite(0), 0};
    std::size_t violations = 0;
    std::string example;
    for (Universe::Id id = 0; id < u.size(); ++id) {
      if (u.sentence(id).kind() != SentenceKind::kImpl) continue;
      if (!state.before(u.left(id), p) && state.before(u.right(id), p) &&
          !state.before(id, p)) {
        if (violations++ == 0) example = to_string(u.sentence(id));
      }
    }
    report.records.push_back(AuditRecord{
        "level " + std::to_string(level), "obs3",
        "F- closed under the implication rule at " + to_string(p),
        violations == 0 ? "closed"
                        : std::to_string(violations) +
                              " implications missing, e.g. " + example,
        p, violations == 0});
  }
  return report;
}

}  // namespace atm
