#ifndef ATM_SCRIPT_H_
#define ATM_SCRIPT_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "atm/axioms.h"
#include "atm/ipc.h"
#include "atm/syntax.h"

namespace atm {

// Step references are 1-based step numbers, as written in script files.
struct LogicalAxiomStep {
  HilbertAxiom axiom;
  std::vector<Term> terms;
};
struct NonlogicalAxiomStep {
  int scheme;
  SchemeBindings bindings;
};
struct ConjStep {
  std::size_t left;
  std::size_t right;
};
struct MpStep {
  std::size_t minor;  // phi
  std::size_t major;  // phi -> psi
};
struct ReleaseStep {
  std::size_t premise;  // A[t]
};
using ProofStep = std::variant<LogicalAxiomStep, NonlogicalAxiomStep,
                               ConjStep, MpStep, ReleaseStep>;

struct ProofScript {
  std::string name;
  std::string description;
  std::optional<Sentence> claim;
  std::vector<ProofStep> steps;
  // Free comment lines, keyed by the number of the step they precede. Key
  // steps.size() + 1 holds trailing comments.
  std::map<std::size_t, std::vector<std::string>> comments;
};

class ScriptSyntaxError : public Error {
 public:
  ScriptSyntaxError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Script file format:
//   # name: <id>
//   # description: <text>
//   # claim: <sentence>
//   # <comment>
//   1. lax A3 s='bot' t=L2
//   2. nlax 9 t=L1 t'='~T[L1]'
//   3. conj 1 2
//   4. mp 1 2
//   5. release 4
// Steps are numbered consecutively from 1.
ProofScript parse_script(std::string_view text);
ProofScript load_script(const std::string& path);
std::string to_text(const ProofScript& script);
std::string to_text(const ProofStep& step);

}  // namespace atm

#endif  // ATM_SCRIPT_H_
