#ifndef ATM_UNIVERSE_H_
#define ATM_UNIVERSE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "atm/syntax.h"

namespace atm {

// A finite set of sentences closed under subsentences and under evaluation
// of the arguments of A, T and M. Sentences are numbered in a fixed order
// (by size, then structurally), so every subsentence has a smaller id than
// the sentence containing it.
class Universe {
 public:
  using Id = std::uint32_t;

  Universe() = default;

  std::size_t size() const { return sentences_.size(); }
  const Sentence& sentence(Id id) const { return sentences_[id]; }
  const std::vector<Sentence>& sentences() const { return sentences_; }
  std::optional<Id> id(const Sentence& phi) const;
  bool contains(const Sentence& phi) const { return id(phi).has_value(); }

  // Id of the left/right part of a compound.
  Id left(Id id) const { return parts_[id].first; }
  Id right(Id id) const { return parts_[id].second; }
  // Id of eval(t) for A[t], T[t], M[t].
  Id target(Id id) const { return parts_[id].first; }

  friend Universe relevant_closure(std::span<const Sentence> seeds,
                                   const ConstantTable& table);

 private:
  std::vector<Sentence> sentences_;
  std::vector<std::pair<Id, Id>> parts_;
  std::unordered_map<Sentence, Id> ids_;
};

Universe relevant_closure(std::span<const Sentence> seeds,
                          const ConstantTable& table);

}  // namespace atm

#endif  // ATM_UNIVERSE_H_
