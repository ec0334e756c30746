#ifndef ATM_TESTS_SUPPORT_ORACLES_H_
#define ATM_TESTS_SUPPORT_ORACLES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <unordered_map>
#include <vector>

#include "atm/ipc.h"
#include "atm/syntax.h"

namespace atm::testing {

// Every sentence of size at most max_size (node count, terms included) whose
// constants are among `constants`.
std::vector<Sentence> enumerate_sentences(std::size_t max_size,
                                          std::span<const Term> atoms);

// Groundedness and nesting by Kleene iteration of the inductive clauses:
//   bot, A[t], M[t]                 value 0
//   phi o psi                       max of the parts, once both have one
//   T[t]                            value of eval(t) plus one
// Sentences without a value at the fixpoint are ungrounded.
class FixpointOracle {
 public:
  explicit FixpointOracle(const ConstantTable& table) : table_(&table) {}

  // Adds phi and everything it depends on.
  void add(const Sentence& phi);
  void solve();
  // nullopt for ungrounded; solve() must have run after the last add().
  std::optional<std::uint32_t> nesting(const Sentence& phi) const;
  std::size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Sentence phi;
    std::vector<std::size_t> deps;
    std::optional<std::uint32_t> value;
  };
  std::size_t intern(const Sentence& phi);

  const ConstantTable* table_;
  std::vector<Node> nodes_;
  std::unordered_map<Sentence, std::size_t> index_;
};

// Intuitionistic provability of a propositional formula (Dyckhoff's
// contraction-free sequent calculus).
bool intuitionistically_valid(const Prop& goal);

// Random sentence with roughly `budget` nodes over the given constants.
Sentence random_sentence(std::mt19937_64& rng, std::size_t budget,
                         std::span<const Term> atoms);
Term random_term(std::mt19937_64& rng, std::size_t budget,
                 std::span<const Term> atoms);

}  // namespace atm::testing

#endif  // ATM_TESTS_SUPPORT_ORACLES_H_
