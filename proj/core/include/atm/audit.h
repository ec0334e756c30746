#ifndef ATM_AUDIT_H_
#define ATM_AUDIT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "atm/construction.h"
#include "atm/syntax.h"

namespace atm {

struct AuditRecord {
  std::string id;
  std::string property;
  std::string expected;
  std::string observed;
  std::optional<Point> point;
  bool pass = true;
};

struct AuditReport {
  std::string name;
  std::vector<AuditRecord> records;
  // Informational variants of failing properties; never counted as failures.
  std::vector<AuditRecord> diagnostics;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
  // Records (and failures) whose property is `property`.
  std::size_t count(const std::string& property) const;
  std::size_t failures(const std::string& property) const;
  void append(const AuditReport& other);
};

// JSON document with a summary and one object per record.
std::string to_json(const AuditReport& report, bool include_passing = true);
std::string to_human(const AuditReport& report, bool include_passing = false);

// A fixed pool of terms, with both grounded and ungrounded evaluations under
// the default table.
std::vector<Term> default_term_pool();

struct AxiomSampleSpec {
  // Instances drawn for each of the 18 families (nlax 1-9, lax A1-A9);
  // half of them use only terms with grounded evaluation.
  std::size_t per_family = 30;
  std::uint64_t seed = 20240101;
  std::vector<Term> pool = default_term_pool();
};

struct AxiomInstance {
  std::string family;  // "nlax 3", "lax A2"
  bool grounded_terms = true;
  Sentence sentence;
};

std::vector<AxiomInstance> sample_axiom_instances(const AxiomSampleSpec& spec,
                                                  const ConstantTable& table);

// One record per instance (expected: never added to F) plus the placement
// of bot at (0,0,0).
AuditReport audit_axioms(const AxiomSampleSpec& spec,
                         const ConstantTable& table,
                         std::uint32_t level_cap = kDefaultLevelCap);

// Seeds for a universe exercising the rules: the liar anomaly sentences and
// compounds of atoms over the default term pool.
std::vector<Sentence> default_audit_seeds(const ConstantTable& table);

// Conjunction, modus ponens (in the form of the second observation) and
// release stability on a simulated state. At most `samples` implications
// are checked for modus ponens, drawn with `seed`.
AuditReport audit_rules(const ConstructionState& state,
                        std::size_t samples = 500,
                        std::uint64_t seed = 20240101);

// The three observations over the whole trace.
AuditReport audit_observations(const ConstructionState& state);

}  // namespace atm

#endif  // ATM_AUDIT_H_
